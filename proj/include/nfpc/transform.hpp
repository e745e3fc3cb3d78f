#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfpc/diagnostics.hpp"
#include "nfpc/nfp_type_library.hpp"
#include "nfpc/policy_model.hpp"
#include "nfpc/service_model.hpp"
#include "nfpc/vsl.hpp"

namespace nfpc {

/// Everything the model-to-model stage produces: one policy per constraint
/// declaration and one vocabulary item per NFP declaration, both in
/// declaration order, plus the subject -> policy-id index.
struct PolicyArtifacts {
  std::vector<Policy> policies;
  std::vector<VocabularyItem> vocabulary;
  std::vector<std::pair<PolicySubjectRef, std::vector<std::string>>> subject_index;

  const std::vector<std::string>* policies_of(const PolicySubjectRef& subject) const;
  std::vector<VocabularyItem> vocabulary_of_service(std::string_view service) const;
  const Policy* policy_by_id(std::string_view id) const;
  const VocabularyItem* item_by_name(std::string_view service, std::string_view name) const;

  friend bool operator==(const PolicyArtifacts&, const PolicyArtifacts&) = default;
};

/// Constraint-function name for an operator over an XSD value type:
/// `<typeword>-<opword>`, e.g. (GE, integer) -> integer-greater-than-or-equals.
/// Ordering operators are defined for double and integer only; unsupported
/// pairs yield nullopt.
std::optional<std::string> function_id(vsl::RelOp op, XsdType type);

/// Lowers one relational atom to an assertion: the value function over
/// `Name/NameValue` and, when the literal is a (value, unit) tuple, the
/// string-equality unit function over `Name/NameUnit`.
Result<PolicyAssertion, Diagnostic> lower_relation(const vsl::Rel& rel,
                                                   const VocabularyItem& item);

/// Lowers one constraint declaration to a policy: the expression's DNF
/// conjuncts become alternatives, each leaf an assertion; offered
/// constraints get one trailing empty alternative.
Result<Policy, Diagnostic> lower_constraint(const ConstraintDecl& decl,
                                            const PolicySubjectRef& subject,
                                            const std::vector<VocabularyItem>& nfp_scope);

/// Full model-to-model mapping. Deterministic: equal inputs give
/// structurally equal artifacts. Precondition: validate_model reported
/// nothing; literal/type mismatches surface here as diagnostics.
Result<PolicyArtifacts, Diagnostic> transform_model(const ServiceModel& model,
                                                    const NfpTypeLibrary& types);

/// Static literal/type checking of every constraint leaf against the type
/// library, without building artifacts. Used by `validate` to fold type
/// errors into its diagnostics.
std::vector<Diagnostic> check_model_types(const ServiceModel& model,
                                          const NfpTypeLibrary& types);

}  // namespace nfpc
