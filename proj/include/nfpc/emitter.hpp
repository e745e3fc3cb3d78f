#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nfpc/policy_model.hpp"
#include "nfpc/service_model.hpp"
#include "nfpc/transform.hpp"

namespace nfpc {

/// How Apply FunctionId attributes are rendered.
///   PaperEntity — literally `wspc&function;NAME`, with `function` declared
///                 as an internal entity so documents stay well-formed.
///   XacmlUrn    — `urn:oasis:names:tc:xacml:1.0:function:NAME`.
enum class FunctionIdMode { PaperEntity, XacmlUrn };

struct EmitConfig {
  FunctionIdMode function_id_mode = FunctionIdMode::XacmlUrn;
  std::string base_namespace = "http://example.org/nfp";

  std::string types_namespace() const { return base_namespace + "/types"; }
};

/// One service's generated documents. Byte-identical across runs for equal
/// inputs and config.
struct EmittedBundle {
  std::string service;
  std::string wsdl_text;
  std::string xsd_text;
  std::map<std::string, std::string> policy_texts;  // policy id -> standalone document
};

/// Vocabulary schema: per item one complex type with `<Name>Value` and,
/// for unit-bearing items, `<Name>Unit` children, plus the global element
/// declaration carrying any semantic annotation attributes.
std::string emit_xsd(const std::vector<VocabularyItem>& vocabulary, const EmitConfig& config);

/// Standalone normal-form policy document:
/// wsp:Policy[@wsu:Id] > wsp:ExactlyOne > wsp:All*, Apply per function.
/// Literal text is emitted exactly as written in the source.
std::string emit_policy(const Policy& policy, const EmitConfig& config);

/// SAWSDL-shaped WSDL: wsdl:types imports each service's schema; every
/// wsdl:service wraps its policies inline followed by its wsdl:endpoint
/// elements wrapping theirs.
std::string emit_wsdl(const ServiceModel& model, const PolicyArtifacts& artifacts,
                      const EmitConfig& config);

/// Per-service bundles in model order; policies are normalized before
/// emission.
std::vector<EmittedBundle> emit_bundles(const ServiceModel& model,
                                        const PolicyArtifacts& artifacts,
                                        const EmitConfig& config);

}  // namespace nfpc
