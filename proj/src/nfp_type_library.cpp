#include "nfpc/nfp_type_library.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "nfpc/decimal.hpp"

namespace nfpc {

std::string_view xsd_type_name(XsdType t) {
  switch (t) {
    case XsdType::Double: return "xsd:double";
    case XsdType::Integer: return "xsd:integer";
    case XsdType::Boolean: return "xsd:boolean";
    case XsdType::String: return "xsd:string";
  }
  return "";
}

std::string_view xsd_type_local(XsdType t) {
  auto name = xsd_type_name(t);
  name.remove_prefix(4);  // "xsd:"
  return name;
}

std::optional<XsdType> xsd_type_from_local(std::string_view local) {
  if (local == "double") return XsdType::Double;
  if (local == "integer") return XsdType::Integer;
  if (local == "boolean") return XsdType::Boolean;
  if (local == "string") return XsdType::String;
  return std::nullopt;
}

NfpTypeLibrary NfpTypeLibrary::builtin() {
  NfpTypeLibrary lib;
  auto open = [](std::string name, XsdType t) {
    return NfpTypeEntry{std::move(name), t, {}, true};
  };
  auto unitless = [](std::string name, XsdType t) {
    return NfpTypeEntry{std::move(name), t, {}, false};
  };
  auto closed = [](std::string name, XsdType t, std::vector<std::string> units) {
    return NfpTypeEntry{std::move(name), t, std::move(units), false};
  };
  lib.entries_ = {
      open("NFP_Real", XsdType::Double),
      open("NFP_Integer", XsdType::Integer),
      unitless("NFP_Boolean", XsdType::Boolean),
      unitless("NFP_String", XsdType::String),
      closed("NFP_Percentage", XsdType::Integer, {"%"}),
      open("NFP_Price", XsdType::Double),  // any currency string
      closed("NFP_Duration", XsdType::Double, {"s", "ms", "us", "min", "hr"}),
      closed("NFP_DataSize", XsdType::Double, {"bit", "Byte", "KB", "MB", "GB"}),
      closed("NFP_Frequency", XsdType::Double, {"Hz", "kHz", "MHz", "GHz"}),
  };
  lib.builtin_count_ = lib.entries_.size();
  return lib;
}

const NfpTypeEntry* NfpTypeLibrary::lookup(std::string_view name) const {
  for (const auto& entry : entries_)
    if (entry.name == name) return &entry;
  return nullptr;
}

std::optional<Diagnostic> NfpTypeLibrary::add(NfpTypeEntry entry) {
  if (lookup(entry.name)) {
    bool is_builtin = false;
    for (size_t i = 0; i < builtin_count_; ++i)
      if (entries_[i].name == entry.name) is_builtin = true;
    return Diagnostic{entry.name, "nfp-type-unique",
                      is_builtin ? "extension shadows built-in NFP type '" + entry.name + "'"
                                 : "duplicate NFP type '" + entry.name + "'"};
  }
  entries_.push_back(std::move(entry));
  return std::nullopt;
}

Result<int, ParseError> NfpTypeLibrary::load_extensions(std::string_view text) {
  Lexer lexer(text);
  int added = 0;
  while (lexer.peek().kind != Token::Kind::End) {
    Token kw = lexer.next();
    if (!kw.is_name("nfptype"))
      return ParseError{kw.pos, "expected 'nfptype'"};
    Token name = lexer.next();
    if (name.kind != Token::Kind::Name)
      return ParseError{name.pos, "expected NFP type name"};
    if (!lexer.peek().is_symbol(":"))
      return ParseError{lexer.peek().pos, "expected ':' after type name"};
    lexer.next();
    Token xsd = lexer.next();
    if (!xsd.is_name("xsd") || !lexer.peek().is_symbol(":"))
      return ParseError{xsd.pos, "expected xsd:TYPE"};
    lexer.next();
    Token local = lexer.next();
    auto t = local.kind == Token::Kind::Name ? xsd_type_from_local(local.text) : std::nullopt;
    if (!t)
      return ParseError{local.pos,
                        "unknown XSD type (expected double, integer, boolean or string)"};

    NfpTypeEntry entry{name.text, *t, {}, false};
    Token spec = lexer.next();
    if (spec.is_name("unitless")) {
      // nothing to record
    } else if (spec.is_name("units")) {
      if (lexer.peek().is_name("open")) {
        lexer.next();
        entry.unit_open = true;
      } else {
        if (!lexer.peek().is_symbol("["))
          return ParseError{lexer.peek().pos, "expected '[' or 'open' after 'units'"};
        lexer.next();
        while (true) {
          Token unit = lexer.next();
          if (unit.kind != Token::Kind::String)
            return ParseError{unit.pos, "expected quoted unit literal"};
          entry.units.push_back(unit.text);
          if (lexer.peek().is_symbol(",")) {
            lexer.next();
            continue;
          }
          break;
        }
        if (!lexer.peek().is_symbol("]"))
          return ParseError{lexer.peek().pos, "expected ']' after unit list"};
        lexer.next();
      }
    } else {
      return ParseError{spec.pos, "expected 'units' or 'unitless'"};
    }

    if (auto diag = add(std::move(entry)))
      return ParseError{name.pos, diag->message};
    ++added;
  }
  if (lexer.error()) return *lexer.error();
  return added;
}

std::optional<Diagnostic> check_literal(const NfpTypeEntry& entry, const vsl::Literal& literal) {
  using Kind = vsl::Literal::Kind;
  auto mismatch = [&](std::string_view expected) {
    return Diagnostic{entry.name, "literal-type",
                      std::string(expected) + " value required for " + entry.name};
  };

  auto check_number = [&](const std::string& text) -> std::optional<Diagnostic> {
    switch (entry.xsd_value_type) {
      case XsdType::Double:
        return std::nullopt;
      case XsdType::Integer:
        if (!is_lexical_integer(text)) return mismatch("integer");
        return std::nullopt;
      case XsdType::Boolean:
        return mismatch("boolean");
      case XsdType::String:
        return mismatch("string");
    }
    return std::nullopt;
  };

  switch (literal.kind) {
    case Kind::Number:
      return check_number(literal.value);
    case Kind::Text:
      if (entry.xsd_value_type != XsdType::String)
        return mismatch(xsd_type_local(entry.xsd_value_type));
      return std::nullopt;
    case Kind::Bool:
      if (entry.xsd_value_type != XsdType::Boolean)
        return mismatch(xsd_type_local(entry.xsd_value_type));
      return std::nullopt;
    case Kind::Tuple: {
      if (auto diag = check_number(literal.value)) return diag;
      bool admissible = entry.unit_open ||
                        std::find(entry.units.begin(), entry.units.end(), literal.unit) !=
                            entry.units.end();
      if (!admissible)
        return Diagnostic{entry.name, "unit-admissible",
                          "inadmissible unit \"" + literal.unit + "\" for " + entry.name};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace nfpc
