#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfpc/diagnostics.hpp"
#include "nfpc/nfp_type_library.hpp"
#include "nfpc/service_model.hpp"
#include "nfpc/vsl.hpp"

namespace nfpc {

/// WSDL element a policy attaches to. For Kind::Service the subject name is
/// the service itself; endpoints carry their owning service so names stay
/// unambiguous across services.
struct PolicySubjectRef {
  enum class Kind { Service, Endpoint };

  Kind kind = Kind::Service;
  std::string service;
  std::string name;  // equals `service` for Kind::Service

  static PolicySubjectRef service_ref(std::string service_name) {
    return {Kind::Service, service_name, service_name};
  }
  static PolicySubjectRef endpoint_ref(std::string service_name, std::string endpoint_name) {
    return {Kind::Endpoint, std::move(service_name), std::move(endpoint_name)};
  }

  friend bool operator==(const PolicySubjectRef&, const PolicySubjectRef&) = default;
};

/// Named, typed aspect assertions constrain; one per NFP declaration.
/// Addressed by attribute-id paths `Name/NameValue` and `Name/NameUnit`.
struct VocabularyItem {
  std::string name;
  XsdType xsd_value_type = XsdType::Double;
  bool has_unit = false;
  std::optional<SemanticAnnotation> semantic;
  std::string domain = "user-defined";
  std::string service;  // scope in which `name` is unique

  std::string value_attribute_id() const { return name + "/" + name + "Value"; }
  std::string unit_attribute_id() const { return name + "/" + name + "Unit"; }

  friend bool operator==(const VocabularyItem&, const VocabularyItem&) = default;
};

/// One predicate over a vocabulary item part: an Apply element in the
/// emitted document. `operator_name` comes from transform::function_id;
/// `op` carries the same operator for evaluation.
struct PolicyConstraintsFunction {
  std::string operator_name;   // e.g. "double-equals"
  vsl::RelOp op = vsl::RelOp::Eq;
  std::string literal_value;   // text exactly as written in the source
  XsdType literal_xsd_type = XsdType::Double;
  std::string vocabulary_item;
  std::string attribute_id;    // "Item/ItemPart"

  friend bool operator==(const PolicyConstraintsFunction&,
                         const PolicyConstraintsFunction&) = default;
};

/// One lowered relational atom: its value function plus, for tuple literals,
/// the unit-equality function.
struct PolicyAssertion {
  std::vector<PolicyConstraintsFunction> functions;  // non-empty

  friend bool operator==(const PolicyAssertion&, const PolicyAssertion&) = default;
};

/// One admissible combination of assertions. An empty assertion list is the
/// vacuous alternative and always holds.
struct PolicyAlternative {
  std::vector<PolicyAssertion> assertions;

  friend bool operator==(const PolicyAlternative&, const PolicyAlternative&) = default;
};

/// Policy in normal-form shape: satisfied when any one alternative holds.
struct Policy {
  std::string id;
  PolicySubjectRef subject;
  ConstraintKind kind = ConstraintKind::Required;  // originating constraint kind
  std::vector<PolicyAlternative> alternatives;     // non-empty

  friend bool operator==(const Policy&, const Policy&) = default;
};

/// Concrete NFP valuation: attribute-id path -> typed literal (never a
/// tuple; units live under their own `Name/NameUnit` path).
class Valuation {
public:
  /// File format: one `Item/ItemPart = literal` per line, `#` comments.
  static Result<Valuation, ParseError> parse(std::string_view text);

  void set(std::string attribute_id, vsl::Literal literal);
  const vsl::Literal* find(std::string_view attribute_id) const;
  const std::map<std::string, vsl::Literal>& entries() const { return entries_; }

private:
  std::map<std::string, vsl::Literal> entries_;
};

struct FunctionFailure {
  size_t alternative = 0;  // index into policy.alternatives
  std::string operator_name;
  std::string attribute_id;

  friend bool operator==(const FunctionFailure&, const FunctionFailure&) = default;
};

struct SatisfactionReport {
  bool satisfied = false;
  std::optional<size_t> satisfied_alternative;  // first satisfying index
  std::vector<FunctionFailure> failures;        // first failing function per alternative
};

struct EvalError {
  enum class Kind { MissingValue, TypeMismatch };
  Kind kind = Kind::MissingValue;
  std::string attribute_id;
  std::string message;
};

/// Removes duplicate assertions within each alternative and duplicate
/// alternatives (compared as assertion sets), keeping first-occurrence
/// order. Idempotent; never changes satisfaction.
Policy normalize(const Policy& policy);

/// Decides whether some alternative holds under the valuation. Every
/// attribute id the policy references must be present (checked up front);
/// function comparisons follow vsl::eval_rel semantics.
Result<SatisfactionReport, EvalError> evaluate(const Policy& policy, const Valuation& valuation);

/// Vocabulary item names referenced by the policy, in first-use order.
std::vector<std::string> vocabulary_of(const Policy& policy);

}  // namespace nfpc
