#include "nfpc/service_model.hpp"

#include <cctype>
#include <set>

#include "lexer.hpp"
#include "vsl_parse.hpp"

namespace nfpc {

std::string_view constraint_kind_name(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Required: return "required";
    case ConstraintKind::Offered: return "offered";
    case ConstraintKind::Contract: return "contract";
  }
  return "";
}

bool is_valid_uri(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  size_t colon = std::string_view::npos;
  for (size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ':') {
      colon = i;
      break;
    }
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '.' && c != '-')
      return false;
  }
  return colon != std::string_view::npos && colon + 1 < text.size();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using ModelResult = Result<ServiceModel, ParseError>;

struct ModelParser {
  Lexer lexer;
  const NfpTypeLibrary& types;
  std::optional<ParseError> error;

  ModelParser(std::string_view text, const NfpTypeLibrary& lib) : lexer(text), types(lib) {}

  bool fail(SourcePos pos, std::string message) {
    if (!error) error = ParseError{pos, std::move(message)};
    return false;
  }

  bool expect_symbol(std::string_view symbol) {
    if (!lexer.peek().is_symbol(symbol))
      return fail(lexer.peek().pos, "expected '" + std::string(symbol) + "'");
    lexer.next();
    return true;
  }

  std::optional<std::string> expect_name(std::string_view what) {
    if (lexer.peek().kind != Token::Kind::Name) {
      fail(lexer.peek().pos, "expected " + std::string(what));
      return std::nullopt;
    }
    return lexer.next().text;
  }

  std::optional<std::string> expect_uri(std::string_view attribute) {
    if (lexer.peek().kind != Token::Kind::String) {
      fail(lexer.peek().pos, "expected quoted URI for " + std::string(attribute));
      return std::nullopt;
    }
    Token t = lexer.next();
    if (!is_valid_uri(t.text)) {
      fail(t.pos, "invalid URI for " + std::string(attribute));
      return std::nullopt;
    }
    return t.text;
  }

  bool parse_semantic(SemanticAnnotation& out) {
    lexer.next();  // "semantic"
    if (!expect_symbol("{")) return false;
    if (!lexer.peek().is_name("modelReference"))
      return fail(lexer.peek().pos, "expected modelReference");
    lexer.next();
    if (!expect_symbol("=")) return false;
    auto model_ref = expect_uri("modelReference");
    if (!model_ref) return false;
    out.model_reference = std::move(*model_ref);
    if (lexer.peek().is_name("loweringSchema")) {
      lexer.next();
      if (!expect_symbol("=")) return false;
      auto uri = expect_uri("loweringSchema");
      if (!uri) return false;
      out.lowering_schema = std::move(*uri);
    }
    if (lexer.peek().is_name("liftingSchema")) {
      lexer.next();
      if (!expect_symbol("=")) return false;
      auto uri = expect_uri("liftingSchema");
      if (!uri) return false;
      out.lifting_schema = std::move(*uri);
    }
    return expect_symbol("}");
  }

  bool parse_nfp(std::vector<NfpDecl>& nfps) {
    SourcePos at = lexer.peek().pos;
    lexer.next();  // "nfp"
    auto name = expect_name("NFP name");
    if (!name) return false;
    if (!expect_symbol(":")) return false;
    SourcePos type_at = lexer.peek().pos;
    auto type_name = expect_name("NFP type name");
    if (!type_name) return false;
    if (!types.lookup(*type_name))
      return fail(type_at, "unknown NFP type '" + *type_name + "'");
    for (const auto& existing : nfps)
      if (existing.name == *name)
        return fail(at, "duplicate NFP name '" + *name + "'");

    NfpDecl decl{std::move(*name), std::move(*type_name), std::nullopt};
    if (lexer.peek().is_name("semantic")) {
      SemanticAnnotation semantic;
      if (!parse_semantic(semantic)) return false;
      decl.semantic = std::move(semantic);
    }
    nfps.push_back(std::move(decl));
    return true;
  }

  bool parse_constraint(std::vector<ConstraintDecl>& constraints,
                        const std::vector<NfpDecl>& scope,
                        std::set<std::string>& constraint_names) {
    lexer.next();  // "constraint"
    Token kind_tok = lexer.next();
    ConstraintKind kind;
    if (kind_tok.is_name("required"))
      kind = ConstraintKind::Required;
    else if (kind_tok.is_name("offered"))
      kind = ConstraintKind::Offered;
    else if (kind_tok.is_name("contract"))
      kind = ConstraintKind::Contract;
    else
      return fail(kind_tok.pos, "expected constraint kind (required, offered or contract)");

    SourcePos name_at = lexer.peek().pos;
    auto name = expect_name("constraint name");
    if (!name) return false;
    if (!constraint_names.insert(*name).second)
      return fail(name_at, "duplicate constraint name '" + *name + "'");
    if (!expect_symbol(":")) return false;

    SourcePos expr_at = lexer.peek().pos;
    auto expr = vsl::parse_expression(lexer);
    if (!expr) return fail(expr.error().pos, expr.error().message);

    for (const auto& rel : vsl::leaves_of(*expr.value())) {
      bool declared = false;
      for (const auto& nfp : scope)
        if (nfp.name == rel.nfp) declared = true;
      if (!declared)
        return fail(expr_at, "constraint '" + *name + "' references undeclared NFP '" +
                                 rel.nfp + "'");
    }
    constraints.push_back(ConstraintDecl{kind, std::move(*name), std::move(expr).value()});
    return true;
  }

  bool parse_endpoint(ServiceDecl& service, std::set<std::string>& constraint_names) {
    SourcePos at = lexer.peek().pos;
    lexer.next();  // "endpoint"
    auto name = expect_name("endpoint name");
    if (!name) return false;
    for (const auto& existing : service.endpoints)
      if (existing.name == *name)
        return fail(at, "duplicate endpoint name '" + *name + "'");

    EndpointDecl endpoint;
    endpoint.name = std::move(*name);
    if (lexer.peek().is_name("binding")) {
      lexer.next();
      if (!expect_symbol(":")) return false;
      auto binding = expect_name("binding name");
      if (!binding) return false;
      endpoint.binding = std::move(*binding);
    }
    if (!expect_symbol("{")) return false;
    while (lexer.peek().is_name("nfp"))
      if (!parse_nfp(endpoint.nfps)) return false;
    while (lexer.peek().is_name("constraint"))
      if (!parse_constraint(endpoint.constraints, endpoint.nfps, constraint_names)) return false;
    if (!expect_symbol("}")) return false;
    service.endpoints.push_back(std::move(endpoint));
    return true;
  }

  bool parse_service(ServiceModel& model, std::set<std::string>& constraint_names) {
    SourcePos at = lexer.peek().pos;
    lexer.next();  // "service"
    auto name = expect_name("service name");
    if (!name) return false;
    for (const auto& existing : model.services)
      if (existing.name == *name)
        return fail(at, "duplicate service name '" + *name + "'");

    ServiceDecl service;
    service.name = std::move(*name);
    if (!expect_symbol("{")) return false;
    if (lexer.peek().is_name("interface")) {
      lexer.next();
      if (!expect_symbol(":")) return false;
      auto iface = expect_name("interface name");
      if (!iface) return false;
      service.interface = std::move(*iface);
    }
    while (lexer.peek().is_name("nfp"))
      if (!parse_nfp(service.nfps)) return false;
    while (lexer.peek().is_name("constraint"))
      if (!parse_constraint(service.constraints, service.nfps, constraint_names)) return false;
    while (lexer.peek().is_name("endpoint"))
      if (!parse_endpoint(service, constraint_names)) return false;
    if (!expect_symbol("}")) return false;
    model.services.push_back(std::move(service));
    return true;
  }

  ModelResult run() {
    ServiceModel model;
    std::set<std::string> constraint_names;
    if (lexer.peek().kind == Token::Kind::End) {
      if (lexer.error()) return *lexer.error();
      return ParseError{lexer.peek().pos, "at least one service required"};
    }
    while (lexer.peek().kind != Token::Kind::End) {
      if (!lexer.peek().is_name("service"))
        return ParseError{lexer.peek().pos, "expected 'service'"};
      if (!parse_service(model, constraint_names)) break;
    }
    if (error) return *error;
    if (lexer.error()) return *lexer.error();
    return model;
  }
};

}  // namespace

Result<ServiceModel, ParseError> parse_model(std::string_view text,
                                             const NfpTypeLibrary& types) {
  return ModelParser(text, types).run();
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_subject(const std::string& subject_label, const std::vector<NfpDecl>& nfps,
                   const std::vector<ConstraintDecl>& constraints,
                   const NfpTypeLibrary& types, std::vector<Diagnostic>& out) {
  for (size_t i = 0; i < nfps.size(); ++i) {
    for (size_t j = i + 1; j < nfps.size(); ++j)
      if (nfps[i].name == nfps[j].name)
        out.push_back({subject_label, "nfp-name-unique",
                       "duplicate NFP name '" + nfps[i].name + "'"});
    if (!types.lookup(nfps[i].type_name))
      out.push_back({subject_label, "nfp-type-resolves",
                     "unknown NFP type '" + nfps[i].type_name + "'"});
    if (nfps[i].semantic) {
      const auto& s = *nfps[i].semantic;
      auto check_uri = [&](const std::optional<std::string>& uri, std::string_view attr) {
        if (uri && !is_valid_uri(*uri))
          out.push_back({subject_label, "semantic-uri",
                         "invalid URI for " + std::string(attr) + " on NFP '" +
                             nfps[i].name + "'"});
      };
      if (s.model_reference.empty() || !is_valid_uri(s.model_reference))
        out.push_back({subject_label, "semantic-uri",
                       "invalid URI for modelReference on NFP '" + nfps[i].name + "'"});
      check_uri(s.lowering_schema, "loweringSchema");
      check_uri(s.lifting_schema, "liftingSchema");
    }
  }
  for (const auto& constraint : constraints)
    for (const auto& rel : vsl::leaves_of(*constraint.expression)) {
      bool declared = false;
      for (const auto& nfp : nfps)
        if (nfp.name == rel.nfp) declared = true;
      if (!declared)
        out.push_back({subject_label, "constraint-scope",
                       "constraint '" + constraint.name + "': NFP not declared on subject: '" +
                           rel.nfp + "'"});
    }
}

}  // namespace

std::vector<Diagnostic> validate_model(const ServiceModel& model, const NfpTypeLibrary& types) {
  std::vector<Diagnostic> out;
  if (model.services.empty()) {
    out.push_back({"model", "at-least-one-service", "at least one service required"});
    return out;
  }

  std::set<std::string> seen_services;
  std::set<std::string> seen_constraints;
  for (const auto& service : model.services) {
    if (!seen_services.insert(service.name).second)
      out.push_back({service.name, "service-name-unique",
                     "duplicate service name '" + service.name + "'"});

    check_subject(service.name, service.nfps, service.constraints, types, out);

    // NFP names must stay unique across the whole service scope (service plus
    // endpoints): they become vocabulary items addressed by Name/NamePart.
    std::set<std::string> scope_names;
    for (const auto& nfp : service.nfps) scope_names.insert(nfp.name);

    std::set<std::string> endpoint_names;
    for (const auto& endpoint : service.endpoints) {
      std::string label = service.name + "/" + endpoint.name;
      if (!endpoint_names.insert(endpoint.name).second)
        out.push_back({label, "endpoint-name-unique",
                       "duplicate endpoint name '" + endpoint.name + "'"});
      check_subject(label, endpoint.nfps, endpoint.constraints, types, out);
      for (const auto& nfp : endpoint.nfps)
        if (!scope_names.insert(nfp.name).second)
          out.push_back({label, "nfp-name-unique-scope",
                         "duplicate NFP name in service scope: '" + nfp.name + "'"});
    }

    auto collect = [&](const std::vector<ConstraintDecl>& constraints) {
      for (const auto& constraint : constraints)
        if (!seen_constraints.insert(constraint.name).second)
          out.push_back({service.name, "constraint-name-unique",
                         "duplicate constraint name '" + constraint.name + "'"});
    };
    collect(service.constraints);
    for (const auto& endpoint : service.endpoints) collect(endpoint.constraints);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical printer

namespace {

void print_nfps(const std::vector<NfpDecl>& nfps, std::string_view indent, std::string& out) {
  for (const auto& nfp : nfps) {
    out += indent;
    out += "nfp " + nfp.name + " : " + nfp.type_name;
    if (nfp.semantic) {
      out += " semantic {\n";
      out += std::string(indent) + "  modelReference = " +
             escape_string_literal(nfp.semantic->model_reference) + "\n";
      if (nfp.semantic->lowering_schema)
        out += std::string(indent) + "  loweringSchema = " +
               escape_string_literal(*nfp.semantic->lowering_schema) + "\n";
      if (nfp.semantic->lifting_schema)
        out += std::string(indent) + "  liftingSchema = " +
               escape_string_literal(*nfp.semantic->lifting_schema) + "\n";
      out += std::string(indent) + "}";
    }
    out += '\n';
  }
}

void print_constraints(const std::vector<ConstraintDecl>& constraints, std::string_view indent,
                       std::string& out) {
  for (const auto& constraint : constraints) {
    out += indent;
    out += "constraint ";
    out += constraint_kind_name(constraint.kind);
    out += " " + constraint.name + " : " + vsl::print_vsl(*constraint.expression) + "\n";
  }
}

}  // namespace

std::string print_model(const ServiceModel& model) {
  std::string out;
  for (const auto& service : model.services) {
    out += "service " + service.name + " {\n";
    if (service.interface) out += "  interface: " + *service.interface + "\n";
    print_nfps(service.nfps, "  ", out);
    print_constraints(service.constraints, "  ", out);
    for (const auto& endpoint : service.endpoints) {
      out += "  endpoint " + endpoint.name;
      if (endpoint.binding) out += " binding: " + *endpoint.binding;
      out += " {\n";
      print_nfps(endpoint.nfps, "    ", out);
      print_constraints(endpoint.constraints, "    ", out);
      out += "  }\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace nfpc
