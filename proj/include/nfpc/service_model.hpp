#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfpc/diagnostics.hpp"
#include "nfpc/nfp_type_library.hpp"
#include "nfpc/vsl.hpp"

namespace nfpc {

/// Semantic reference attached to an NFP: a concept URI plus optional
/// lowering/lifting schema mappings.
struct SemanticAnnotation {
  std::string model_reference;
  std::optional<std::string> lowering_schema;
  std::optional<std::string> lifting_schema;

  friend bool operator==(const SemanticAnnotation&, const SemanticAnnotation&) = default;
};

struct NfpDecl {
  std::string name;
  std::string type_name;
  std::optional<SemanticAnnotation> semantic;

  friend bool operator==(const NfpDecl&, const NfpDecl&) = default;
};

enum class ConstraintKind { Required, Offered, Contract };

std::string_view constraint_kind_name(ConstraintKind kind);

struct ConstraintDecl {
  ConstraintKind kind = ConstraintKind::Required;
  std::string name;
  vsl::ExprPtr expression;

  friend bool operator==(const ConstraintDecl& a, const ConstraintDecl& b) {
    return a.kind == b.kind && a.name == b.name && vsl::expr_equal(a.expression, b.expression);
  }
};

struct EndpointDecl {
  std::string name;
  std::optional<std::string> binding;
  std::vector<NfpDecl> nfps;
  std::vector<ConstraintDecl> constraints;

  friend bool operator==(const EndpointDecl&, const EndpointDecl&) = default;
};

struct ServiceDecl {
  std::string name;
  std::optional<std::string> interface;
  std::vector<NfpDecl> nfps;
  std::vector<ConstraintDecl> constraints;
  std::vector<EndpointDecl> endpoints;

  friend bool operator==(const ServiceDecl&, const ServiceDecl&) = default;
};

/// Parsed input model: services with their NFPs, constraints and endpoints,
/// in declaration order. Immutable after construction.
struct ServiceModel {
  std::vector<ServiceDecl> services;

  friend bool operator==(const ServiceModel&, const ServiceModel&) = default;
};

/// Parses the textual model format. Enforces the structural invariants
/// (unique names, resolvable NFP types, constraints scoped to their own
/// subject); the first violation is reported as a positioned ParseError.
Result<ServiceModel, ParseError> parse_model(std::string_view text,
                                             const NfpTypeLibrary& types);

/// Cross-reference checks for programmatically built models: duplicate
/// names, unknown NFP types, constraint scoping, URI syntax, NFP-name
/// uniqueness per service scope. Empty result means valid.
std::vector<Diagnostic> validate_model(const ServiceModel& model, const NfpTypeLibrary& types);

/// Canonical printer; parse_model(print_model(m)) reproduces an equal model.
std::string print_model(const ServiceModel& model);

/// URI sanity check used for semantic annotations: a scheme followed by a
/// non-empty remainder.
bool is_valid_uri(std::string_view text);

}  // namespace nfpc
