#include "nfpc/transform.hpp"

namespace nfpc {

const std::vector<std::string>* PolicyArtifacts::policies_of(
    const PolicySubjectRef& subject) const {
  for (const auto& [ref, ids] : subject_index)
    if (ref == subject) return &ids;
  return nullptr;
}

std::vector<VocabularyItem> PolicyArtifacts::vocabulary_of_service(
    std::string_view service) const {
  std::vector<VocabularyItem> out;
  for (const auto& item : vocabulary)
    if (item.service == service) out.push_back(item);
  return out;
}

const Policy* PolicyArtifacts::policy_by_id(std::string_view id) const {
  for (const auto& policy : policies)
    if (policy.id == id) return &policy;
  return nullptr;
}

const VocabularyItem* PolicyArtifacts::item_by_name(std::string_view service,
                                                    std::string_view name) const {
  for (const auto& item : vocabulary)
    if (item.service == service && item.name == name) return &item;
  return nullptr;
}

std::optional<std::string> function_id(vsl::RelOp op, XsdType type) {
  if (vsl::rel_op_is_ordering(op) && type != XsdType::Double && type != XsdType::Integer)
    return std::nullopt;
  std::string_view opword;
  switch (op) {
    case vsl::RelOp::Eq: opword = "equals"; break;
    case vsl::RelOp::Ne: opword = "not-equals"; break;
    case vsl::RelOp::Lt: opword = "less-than"; break;
    case vsl::RelOp::Le: opword = "less-than-or-equals"; break;
    case vsl::RelOp::Gt: opword = "greater-than"; break;
    case vsl::RelOp::Ge: opword = "greater-than-or-equals"; break;
  }
  return std::string(xsd_type_local(type)) + "-" + std::string(opword);
}

Result<PolicyAssertion, Diagnostic> lower_relation(const vsl::Rel& rel,
                                                   const VocabularyItem& item) {
  auto value_fn = function_id(rel.op, item.xsd_value_type);
  if (!value_fn)
    return Diagnostic{item.name, "function-supported",
                      "ordering operator '" + std::string(vsl::rel_op_text(rel.op)) +
                          "' unsupported for " +
                          std::string(xsd_type_name(item.xsd_value_type))};

  PolicyAssertion assertion;
  PolicyConstraintsFunction value;
  value.operator_name = std::move(*value_fn);
  value.op = rel.op;
  value.literal_value = rel.value.value;
  value.literal_xsd_type = item.xsd_value_type;
  value.vocabulary_item = item.name;
  value.attribute_id = item.value_attribute_id();
  assertion.functions.push_back(std::move(value));

  if (rel.value.kind == vsl::Literal::Kind::Tuple) {
    // the unit is always compared with string equality, whatever rel.op is
    PolicyConstraintsFunction unit;
    unit.operator_name = *function_id(vsl::RelOp::Eq, XsdType::String);
    unit.op = vsl::RelOp::Eq;
    unit.literal_value = rel.value.unit;
    unit.literal_xsd_type = XsdType::String;
    unit.vocabulary_item = item.name;
    unit.attribute_id = item.unit_attribute_id();
    assertion.functions.push_back(std::move(unit));
  }
  return assertion;
}

Result<Policy, Diagnostic> lower_constraint(const ConstraintDecl& decl,
                                            const PolicySubjectRef& subject,
                                            const std::vector<VocabularyItem>& nfp_scope) {
  Policy policy;
  policy.id = decl.name;
  policy.subject = subject;
  policy.kind = decl.kind;

  for (const auto& conjunct : vsl::to_dnf(*decl.expression)) {
    PolicyAlternative alternative;
    for (const auto& rel : conjunct) {
      const VocabularyItem* item = nullptr;
      for (const auto& candidate : nfp_scope)
        if (candidate.name == rel.nfp) item = &candidate;
      if (!item)
        return Diagnostic{subject.name, "constraint-scope",
                          "constraint '" + decl.name + "': NFP not declared on subject: '" +
                              rel.nfp + "'"};
      auto assertion = lower_relation(rel, *item);
      if (!assertion) return assertion.error();
      alternative.assertions.push_back(std::move(assertion).value());
    }
    policy.alternatives.push_back(std::move(alternative));
  }

  if (decl.kind == ConstraintKind::Offered)
    policy.alternatives.push_back(PolicyAlternative{});  // vacuous alternative
  return policy;
}

namespace {

Result<VocabularyItem, Diagnostic> item_for(const NfpDecl& nfp, std::string_view service,
                                            const NfpTypeLibrary& types) {
  const NfpTypeEntry* entry = types.lookup(nfp.type_name);
  if (!entry)
    return Diagnostic{std::string(service), "nfp-type-resolves",
                      "unknown NFP type '" + nfp.type_name + "'"};
  VocabularyItem item;
  item.name = nfp.name;
  item.xsd_value_type = entry->xsd_value_type;
  item.has_unit = entry->has_unit();
  item.semantic = nfp.semantic;
  item.service = service;
  return item;
}

std::optional<Diagnostic> check_constraint_literals(
    const ConstraintDecl& decl, const std::vector<NfpDecl>& nfps,
    const NfpTypeLibrary& types, std::string_view subject) {
  for (const auto& rel : vsl::leaves_of(*decl.expression)) {
    const NfpDecl* nfp = nullptr;
    for (const auto& candidate : nfps)
      if (candidate.name == rel.nfp) nfp = &candidate;
    if (!nfp)
      return Diagnostic{std::string(subject), "constraint-scope",
                        "constraint '" + decl.name + "': NFP not declared on subject: '" +
                            rel.nfp + "'"};
    const NfpTypeEntry* entry = types.lookup(nfp->type_name);
    if (!entry)
      return Diagnostic{std::string(subject), "nfp-type-resolves",
                        "unknown NFP type '" + nfp->type_name + "'"};
    if (auto diag = check_literal(*entry, rel.value)) {
      diag->subject = std::string(subject);
      diag->message = "constraint '" + decl.name + "', NFP '" + rel.nfp + "': " + diag->message;
      return diag;
    }
    if (vsl::rel_op_is_ordering(rel.op) && entry->xsd_value_type != XsdType::Double &&
        entry->xsd_value_type != XsdType::Integer)
      return Diagnostic{std::string(subject), "function-supported",
                        "constraint '" + decl.name + "': ordering operator '" +
                            std::string(vsl::rel_op_text(rel.op)) + "' unsupported for " +
                            std::string(xsd_type_name(entry->xsd_value_type))};
  }
  return std::nullopt;
}

}  // namespace

Result<PolicyArtifacts, Diagnostic> transform_model(const ServiceModel& model,
                                                    const NfpTypeLibrary& types) {
  PolicyArtifacts artifacts;

  for (const auto& service : model.services) {
    // vocabulary: service NFPs first, then endpoint NFPs, declaration order
    std::vector<VocabularyItem> service_scope;
    for (const auto& nfp : service.nfps) {
      auto item = item_for(nfp, service.name, types);
      if (!item) return item.error();
      service_scope.push_back(item.value());
      artifacts.vocabulary.push_back(std::move(item).value());
    }
    std::vector<std::vector<VocabularyItem>> endpoint_scopes;
    for (const auto& endpoint : service.endpoints) {
      auto& scope = endpoint_scopes.emplace_back();
      for (const auto& nfp : endpoint.nfps) {
        auto item = item_for(nfp, service.name, types);
        if (!item) return item.error();
        scope.push_back(item.value());
        artifacts.vocabulary.push_back(std::move(item).value());
      }
    }

    auto lower_subject = [&](const PolicySubjectRef& subject,
                             const std::vector<ConstraintDecl>& constraints,
                             const std::vector<NfpDecl>& nfps,
                             const std::vector<VocabularyItem>& scope)
        -> std::optional<Diagnostic> {
      std::vector<std::string> ids;
      for (const auto& decl : constraints) {
        if (auto diag = check_constraint_literals(decl, nfps, types, subject.name)) return diag;
        auto policy = lower_constraint(decl, subject, scope);
        if (!policy) return policy.error();
        ids.push_back(policy.value().id);
        artifacts.policies.push_back(std::move(policy).value());
      }
      artifacts.subject_index.emplace_back(subject, std::move(ids));
      return std::nullopt;
    };

    auto subject = PolicySubjectRef::service_ref(service.name);
    if (auto diag = lower_subject(subject, service.constraints, service.nfps, service_scope))
      return *diag;
    for (size_t e = 0; e < service.endpoints.size(); ++e) {
      const auto& endpoint = service.endpoints[e];
      auto endpoint_subject = PolicySubjectRef::endpoint_ref(service.name, endpoint.name);
      if (auto diag = lower_subject(endpoint_subject, endpoint.constraints, endpoint.nfps,
                                    endpoint_scopes[e]))
        return *diag;
    }
  }
  return artifacts;
}

std::vector<Diagnostic> check_model_types(const ServiceModel& model,
                                          const NfpTypeLibrary& types) {
  std::vector<Diagnostic> out;
  for (const auto& service : model.services) {
    for (const auto& decl : service.constraints)
      if (auto diag = check_constraint_literals(decl, service.nfps, types, service.name))
        out.push_back(std::move(*diag));
    for (const auto& endpoint : service.endpoints)
      for (const auto& decl : endpoint.constraints)
        if (auto diag = check_constraint_literals(decl, endpoint.nfps, types,
                                                  service.name + "/" + endpoint.name))
          out.push_back(std::move(*diag));
  }
  return out;
}

}  // namespace nfpc
