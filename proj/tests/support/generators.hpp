#pragma once

// Seeded random generators for property tests. Everything draws from a
// caller-owned mt19937 so failures reproduce.

#include <random>
#include <string>
#include <vector>

#include "nfpc/nfp_type_library.hpp"
#include "nfpc/policy_model.hpp"
#include "nfpc/service_model.hpp"
#include "nfpc/transform.hpp"
#include "nfpc/vsl.hpp"

namespace nfpc::test {

using Rng = std::mt19937;

inline size_t pick(Rng& rng, size_t n) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 2) == 0; }

inline vsl::RelOp random_op(Rng& rng) {
  static const vsl::RelOp ops[] = {vsl::RelOp::Eq, vsl::RelOp::Ne, vsl::RelOp::Lt,
                                   vsl::RelOp::Le, vsl::RelOp::Gt, vsl::RelOp::Ge};
  return ops[pick(rng, 6)];
}

inline vsl::Literal random_literal(Rng& rng) {
  switch (pick(rng, 4)) {
    case 0: {
      static const char* numbers[] = {"0", "1", "42", "2.5", "200.00", "-3", "0.10"};
      return vsl::Literal::number(numbers[pick(rng, 7)]);
    }
    case 1: {
      static const char* texts[] = {"gold", "basic", "a b", "x\"y"};
      return vsl::Literal::text(texts[pick(rng, 4)]);
    }
    case 2:
      return vsl::Literal::boolean(coin(rng));
    default: {
      static const std::pair<const char*, const char*> tuples[] = {
          {"90", "%"}, {"0.10", "ms"}, {"200.00", "$US"}, {"5", "s"}};
      auto [value, unit] = tuples[pick(rng, 4)];
      return vsl::Literal::tuple(value, unit);
    }
  }
}

inline vsl::Rel random_rel(Rng& rng) {
  static const char* names[] = {"A", "B", "C", "D", "Price", "Delay"};
  return vsl::Rel{names[pick(rng, 6)], random_op(rng), random_literal(rng)};
}

// random tree with ~`leaves` Rel leaves; factories keep it canonical
inline vsl::ExprPtr random_expr(Rng& rng, size_t leaves) {
  if (leaves <= 1) return vsl::make_rel(random_rel(rng));
  size_t left = 1 + pick(rng, leaves - 1);
  std::vector<vsl::ExprPtr> children{random_expr(rng, left),
                                     random_expr(rng, leaves - left)};
  return coin(rng) ? vsl::make_and(std::move(children)) : vsl::make_or(std::move(children));
}

inline vsl::ExprPtr random_expr(Rng& rng) { return random_expr(rng, 1 + pick(rng, 5)); }

// --- random policies (for normalize properties) ----------------------------

inline PolicyConstraintsFunction random_function(Rng& rng) {
  PolicyConstraintsFunction f;
  static const char* items[] = {"P", "Q"};
  f.vocabulary_item = items[pick(rng, 2)];
  if (coin(rng)) {
    f.op = random_op(rng);
    f.literal_xsd_type = XsdType::Integer;
    static const char* values[] = {"1", "2", "3"};
    f.literal_value = values[pick(rng, 3)];
    f.attribute_id = f.vocabulary_item + "/" + f.vocabulary_item + "Value";
  } else {
    f.op = coin(rng) ? vsl::RelOp::Eq : vsl::RelOp::Ne;
    f.literal_xsd_type = XsdType::String;
    static const char* values[] = {"u", "v"};
    f.literal_value = values[pick(rng, 2)];
    f.attribute_id = f.vocabulary_item + "/" + f.vocabulary_item + "Unit";
  }
  f.operator_name = *function_id(f.op, f.literal_xsd_type);
  return f;
}

inline Policy random_policy(Rng& rng) {
  Policy policy;
  policy.id = "RandomPolicy";
  policy.subject = PolicySubjectRef::service_ref("S");
  size_t alternative_count = 1 + pick(rng, 4);
  for (size_t a = 0; a < alternative_count; ++a) {
    PolicyAlternative alternative;
    size_t assertion_count = pick(rng, 4);  // empty alternatives allowed
    for (size_t s = 0; s < assertion_count; ++s) {
      PolicyAssertion assertion;
      size_t function_count = 1 + pick(rng, 2);
      for (size_t f = 0; f < function_count; ++f)
        assertion.functions.push_back(random_function(rng));
      alternative.assertions.push_back(std::move(assertion));
    }
    policy.alternatives.push_back(std::move(alternative));
  }
  // make duplicates likely so normalize has work to do
  if (coin(rng) && !policy.alternatives.empty())
    policy.alternatives.push_back(policy.alternatives[pick(rng, policy.alternatives.size())]);
  return policy;
}

// random valuation covering the P/Q attribute pool of random_function
inline Valuation random_pool_valuation(Rng& rng) {
  Valuation v;
  static const char* values[] = {"1", "2", "3"};
  static const char* units[] = {"u", "v", "w"};
  for (const char* item : {"P", "Q"}) {
    v.set(std::string(item) + "/" + item + "Value",
          vsl::Literal::number(values[pick(rng, 3)]));
    v.set(std::string(item) + "/" + item + "Unit", vsl::Literal::text(units[pick(rng, 3)]));
  }
  return v;
}

// --- random service models (for printer round-trips) -----------------------

inline ServiceModel random_model(Rng& rng, const NfpTypeLibrary& types) {
  static const char* type_names[] = {"NFP_Real",       "NFP_Integer",  "NFP_Boolean",
                                     "NFP_String",     "NFP_Percentage", "NFP_Price",
                                     "NFP_Duration",   "NFP_DataSize", "NFP_Frequency"};
  (void)types;
  ServiceModel model;
  int counter = 0;
  size_t service_count = 1 + pick(rng, 3);
  for (size_t s = 0; s < service_count; ++s) {
    ServiceDecl service;
    service.name = "Service" + std::to_string(++counter);
    if (coin(rng)) service.interface = "Interface" + std::to_string(counter);

    auto gen_nfps = [&](std::vector<NfpDecl>& nfps) {
      size_t n = pick(rng, 4);
      for (size_t i = 0; i < n; ++i) {
        NfpDecl nfp;
        nfp.name = "Nfp" + std::to_string(++counter);
        nfp.type_name = type_names[pick(rng, 9)];
        if (pick(rng, 4) == 0) {
          SemanticAnnotation semantic;
          semantic.model_reference = "http://onto.example/ref#" + nfp.name;
          if (coin(rng)) semantic.lowering_schema = "http://onto.example/lower";
          if (coin(rng)) semantic.lifting_schema = "http://onto.example/lift";
          nfp.semantic = std::move(semantic);
        }
        nfps.push_back(std::move(nfp));
      }
    };
    auto gen_constraints = [&](const std::vector<NfpDecl>& nfps,
                               std::vector<ConstraintDecl>& constraints) {
      if (nfps.empty()) return;
      size_t n = pick(rng, 3);
      for (size_t i = 0; i < n; ++i) {
        ConstraintDecl decl;
        static const ConstraintKind kinds[] = {ConstraintKind::Required,
                                               ConstraintKind::Offered,
                                               ConstraintKind::Contract};
        decl.kind = kinds[pick(rng, 3)];
        decl.name = "Constraint" + std::to_string(++counter);
        // leaves must reference declared NFPs
        size_t leaves = 1 + pick(rng, 3);
        std::vector<vsl::ExprPtr> atoms;
        for (size_t l = 0; l < leaves; ++l) {
          vsl::Rel rel = random_rel(rng);
          rel.nfp = nfps[pick(rng, nfps.size())].name;
          atoms.push_back(vsl::make_rel(std::move(rel)));
        }
        vsl::ExprPtr expr = atoms[0];
        for (size_t l = 1; l < atoms.size(); ++l) {
          std::vector<vsl::ExprPtr> pair{expr, atoms[l]};
          expr = coin(rng) ? vsl::make_and(std::move(pair)) : vsl::make_or(std::move(pair));
        }
        decl.expression = std::move(expr);
        constraints.push_back(std::move(decl));
      }
    };

    gen_nfps(service.nfps);
    gen_constraints(service.nfps, service.constraints);
    size_t endpoint_count = pick(rng, 3);
    for (size_t e = 0; e < endpoint_count; ++e) {
      EndpointDecl endpoint;
      endpoint.name = "Endpoint" + std::to_string(++counter);
      if (coin(rng)) endpoint.binding = "Binding" + std::to_string(counter);
      gen_nfps(endpoint.nfps);
      gen_constraints(endpoint.nfps, endpoint.constraints);
      service.endpoints.push_back(std::move(endpoint));
    }
    model.services.push_back(std::move(service));
  }
  return model;
}

}  // namespace nfpc::test
