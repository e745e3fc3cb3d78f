#include "nfpc/policy_model.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"
#include "nfpc/decimal.hpp"

namespace nfpc {

// ---------------------------------------------------------------------------
// Valuation

Result<Valuation, ParseError> Valuation::parse(std::string_view text) {
  Valuation v;
  Lexer lexer(text);
  while (lexer.peek().kind != Token::Kind::End) {
    Token item = lexer.next();
    if (item.kind != Token::Kind::Name)
      return ParseError{item.pos, "expected attribute-id path"};
    if (!lexer.peek().is_symbol("/"))
      return ParseError{lexer.peek().pos, "expected '/' in attribute-id path"};
    lexer.next();
    Token part = lexer.next();
    if (part.kind != Token::Kind::Name)
      return ParseError{part.pos, "expected attribute part name"};
    if (!lexer.peek().is_symbol("="))
      return ParseError{lexer.peek().pos, "expected '='"};
    lexer.next();

    Token value = lexer.next();
    vsl::Literal literal;
    switch (value.kind) {
      case Token::Kind::Number:
        literal = vsl::Literal::number(std::move(value.text));
        break;
      case Token::Kind::String:
        literal = vsl::Literal::text(std::move(value.text));
        break;
      case Token::Kind::Name:
        if (value.text == "true" || value.text == "false") {
          literal = vsl::Literal::boolean(value.text == "true");
          break;
        }
        [[fallthrough]];
      default:
        return ParseError{value.pos, "expected literal value"};
    }
    std::string path = item.text + "/" + part.text;
    if (v.entries_.count(path))
      return ParseError{item.pos, "duplicate valuation entry '" + path + "'"};
    v.entries_.emplace(std::move(path), std::move(literal));
  }
  if (lexer.error()) return *lexer.error();
  return v;
}

void Valuation::set(std::string attribute_id, vsl::Literal literal) {
  entries_[std::move(attribute_id)] = std::move(literal);
}

const vsl::Literal* Valuation::find(std::string_view attribute_id) const {
  auto it = entries_.find(std::string(attribute_id));
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

std::string function_fingerprint(const PolicyConstraintsFunction& f) {
  std::string out = f.operator_name;
  out += '\x1f';
  out += f.literal_value;
  out += '\x1f';
  out += xsd_type_name(f.literal_xsd_type);
  out += '\x1f';
  out += f.attribute_id;
  return out;
}

std::string assertion_fingerprint(const PolicyAssertion& a) {
  std::string out;
  for (const auto& f : a.functions) {
    out += function_fingerprint(f);
    out += '\x1e';
  }
  return out;
}

// order-insensitive key for duplicate-alternative detection
std::set<std::string> alternative_key(const PolicyAlternative& alt) {
  std::set<std::string> key;
  for (const auto& a : alt.assertions) key.insert(assertion_fingerprint(a));
  return key;
}

}  // namespace

Policy normalize(const Policy& policy) {
  Policy out = policy;
  out.alternatives.clear();

  std::set<std::set<std::string>> seen;
  for (const auto& alternative : policy.alternatives) {
    PolicyAlternative deduped;
    for (const auto& assertion : alternative.assertions)
      if (std::find(deduped.assertions.begin(), deduped.assertions.end(), assertion) ==
          deduped.assertions.end())
        deduped.assertions.push_back(assertion);
    if (seen.insert(alternative_key(deduped)).second)
      out.alternatives.push_back(std::move(deduped));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

vsl::Literal::Kind expected_kind(XsdType t) {
  switch (t) {
    case XsdType::Double:
    case XsdType::Integer:
      return vsl::Literal::Kind::Number;
    case XsdType::Boolean:
      return vsl::Literal::Kind::Bool;
    case XsdType::String:
      return vsl::Literal::Kind::Text;
  }
  return vsl::Literal::Kind::Number;
}

std::string_view literal_kind_name(vsl::Literal::Kind k) {
  switch (k) {
    case vsl::Literal::Kind::Number: return "number";
    case vsl::Literal::Kind::Text: return "string";
    case vsl::Literal::Kind::Bool: return "boolean";
    case vsl::Literal::Kind::Tuple: return "tuple";
  }
  return "";
}

// checks the valuation entry's kind against the function's declared type
std::optional<EvalError> check_value_kind(const PolicyConstraintsFunction& f,
                                          const vsl::Literal& value) {
  auto want = expected_kind(f.literal_xsd_type);
  if (value.kind != want)
    return EvalError{EvalError::Kind::TypeMismatch, f.attribute_id,
                     "expected " + std::string(literal_kind_name(want)) + " for '" +
                         f.attribute_id + "', found " +
                         std::string(literal_kind_name(value.kind))};
  if (f.literal_xsd_type == XsdType::Integer && !is_lexical_integer(value.value))
    return EvalError{EvalError::Kind::TypeMismatch, f.attribute_id,
                     "integer value required for '" + f.attribute_id + "'"};
  return std::nullopt;
}

Result<bool, EvalError> eval_function(const PolicyConstraintsFunction& f,
                                      const vsl::Literal& value) {
  if (auto err = check_value_kind(f, value)) return *err;
  vsl::Rel rel{f.vocabulary_item, f.op,
               vsl::Literal{expected_kind(f.literal_xsd_type), f.literal_value, {}}};
  auto result = vsl::eval_rel(rel, value, std::nullopt);
  if (!result)
    return EvalError{EvalError::Kind::TypeMismatch, f.attribute_id, result.error().message};
  return result.value();
}

}  // namespace

Result<SatisfactionReport, EvalError> evaluate(const Policy& policy, const Valuation& valuation) {
  // every referenced attribute id must be present before anything is decided
  for (const auto& alternative : policy.alternatives)
    for (const auto& assertion : alternative.assertions)
      for (const auto& f : assertion.functions)
        if (!valuation.find(f.attribute_id))
          return EvalError{EvalError::Kind::MissingValue, f.attribute_id,
                           "no value for '" + f.attribute_id + "'"};

  SatisfactionReport report;
  for (size_t i = 0; i < policy.alternatives.size(); ++i) {
    const auto& alternative = policy.alternatives[i];
    bool holds = true;
    for (const auto& assertion : alternative.assertions) {
      for (const auto& f : assertion.functions) {
        auto result = eval_function(f, *valuation.find(f.attribute_id));
        if (!result) return result.error();
        if (!result.value()) {
          holds = false;
          report.failures.push_back(FunctionFailure{i, f.operator_name, f.attribute_id});
          break;
        }
      }
      if (!holds) break;
    }
    if (holds) {
      report.satisfied = true;
      report.satisfied_alternative = i;
      report.failures.clear();
      return report;
    }
  }
  return report;
}

std::vector<std::string> vocabulary_of(const Policy& policy) {
  std::vector<std::string> out;
  for (const auto& alternative : policy.alternatives)
    for (const auto& assertion : alternative.assertions)
      for (const auto& f : assertion.functions)
        if (std::find(out.begin(), out.end(), f.vocabulary_item) == out.end())
          out.push_back(f.vocabulary_item);
  return out;
}

}  // namespace nfpc
