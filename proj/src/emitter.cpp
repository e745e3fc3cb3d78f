#include "nfpc/emitter.hpp"

#include "nfpc/xml_writer.hpp"

namespace nfpc {

namespace {

constexpr std::string_view kWsdlNs = "http://www.w3.org/ns/wsdl";
constexpr std::string_view kWspNs = "http://www.w3.org/ns/ws-policy";
constexpr std::string_view kWsuNs =
    "http://docs.oasis-open.org/wss/2004/01/oasis-200401-wss-wssecurity-utility-1.0.xsd";
constexpr std::string_view kSawsdlNs = "http://www.w3.org/ns/sawsdl";
constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema";
constexpr std::string_view kXsdEntityValue = "http://www.w3.org/2001/XMLSchema#";
constexpr std::string_view kXacmlFunctionUrn = "urn:oasis:names:tc:xacml:1.0:function:";
// expands wspc&function;NAME to wspc:function:NAME
constexpr std::string_view kFunctionEntityValue = ":function:";

std::vector<xml::DtdEntity> document_entities(const EmitConfig& config) {
  std::vector<xml::DtdEntity> entities{{"xsd", std::string(kXsdEntityValue)}};
  if (config.function_id_mode == FunctionIdMode::PaperEntity)
    entities.push_back({"function", std::string(kFunctionEntityValue)});
  return entities;
}

xml::Element apply_element(const PolicyConstraintsFunction& function, const EmitConfig& config) {
  xml::Element apply("Apply");
  if (config.function_id_mode == FunctionIdMode::PaperEntity)
    apply.raw_attr("FunctionId", "wspc&function;" + function.operator_name);
  else
    apply.attr("FunctionId", std::string(kXacmlFunctionUrn) + function.operator_name);

  std::string data_type = "&xsd;" + std::string(xsd_type_local(function.literal_xsd_type));
  xml::Element value("AttributeValue");
  value.raw_attr("DataType", data_type);
  value.text(function.literal_value);
  apply.child(std::move(value));

  xml::Element designator("ResourceAttributeDesignator");
  designator.attr("AttributeId", function.attribute_id);
  designator.raw_attr("DataType", data_type);
  apply.child(std::move(designator));
  return apply;
}

// wsp:Policy > wsp:ExactlyOne > wsp:All* fragment, shared by the standalone
// policy document and the WSDL embedding
xml::Element policy_element(const Policy& policy, const EmitConfig& config) {
  xml::Element root("wsp:Policy");
  root.attr("wsu:Id", policy.id);
  xml::Element exactly_one("wsp:ExactlyOne");
  for (const auto& alternative : policy.alternatives) {
    xml::Element all("wsp:All");
    for (const auto& assertion : alternative.assertions)
      for (const auto& function : assertion.functions)
        all.child(apply_element(function, config));
    exactly_one.child(std::move(all));
  }
  root.child(std::move(exactly_one));
  return root;
}

}  // namespace

std::string emit_xsd(const std::vector<VocabularyItem>& vocabulary, const EmitConfig& config) {
  xml::Element schema("xsd:schema");
  schema.attr("xmlns:xsd", kXsdNs)
      .attr("xmlns:sawsdl", kSawsdlNs)
      .attr("xmlns:tns", config.types_namespace())
      .attr("targetNamespace", config.types_namespace())
      .attr("elementFormDefault", "qualified");

  for (const auto& item : vocabulary) {
    xml::Element sequence("xsd:sequence");
    xml::Element value("xsd:element");
    value.attr("name", item.name + "Value")
        .attr("type", std::string(xsd_type_name(item.xsd_value_type)));
    sequence.child(std::move(value));
    if (item.has_unit) {
      xml::Element unit("xsd:element");
      unit.attr("name", item.name + "Unit").attr("type", "xsd:string");
      sequence.child(std::move(unit));
    }
    xml::Element complex_type("xsd:complexType");
    complex_type.attr("name", item.name);
    complex_type.child(std::move(sequence));
    schema.child(std::move(complex_type));

    xml::Element element("xsd:element");
    element.attr("name", item.name).attr("type", "tns:" + item.name);
    if (item.semantic) {
      element.attr("sawsdl:modelReference", item.semantic->model_reference);
      if (item.semantic->lowering_schema)
        element.attr("sawsdl:loweringSchemaMapping", *item.semantic->lowering_schema);
      if (item.semantic->lifting_schema)
        element.attr("sawsdl:liftingSchemaMapping", *item.semantic->lifting_schema);
    }
    schema.child(std::move(element));
  }
  return xml::render_document(schema);
}

std::string emit_policy(const Policy& policy, const EmitConfig& config) {
  Policy normal = normalize(policy);
  xml::Element root = policy_element(normal, config);
  root.attr("xmlns:wsp", kWspNs).attr("xmlns:wsu", kWsuNs);
  return xml::render_document(root, document_entities(config));
}

std::string emit_wsdl(const ServiceModel& model, const PolicyArtifacts& artifacts,
                      const EmitConfig& config) {
  xml::Element description("wsdl:description");
  description.attr("xmlns:wsdl", kWsdlNs)
      .attr("xmlns:wsp", kWspNs)
      .attr("xmlns:wsu", kWsuNs)
      .attr("xmlns:xsd", kXsdNs)
      .attr("targetNamespace", config.base_namespace);

  xml::Element types("wsdl:types");
  for (const auto& service : model.services) {
    xml::Element import("xsd:import");
    import.attr("namespace", config.types_namespace())
        .attr("schemaLocation", service.name + "-types.xsd");
    types.child(std::move(import));
  }
  description.child(std::move(types));

  auto append_policies = [&](xml::Element& parent, const PolicySubjectRef& subject) {
    const auto* ids = artifacts.policies_of(subject);
    if (!ids) return;
    for (const auto& id : *ids)
      if (const Policy* policy = artifacts.policy_by_id(id))
        parent.child(policy_element(normalize(*policy), config));
  };

  for (const auto& service : model.services) {
    xml::Element service_el("wsdl:service");
    service_el.attr("name", service.name);
    if (service.interface) service_el.attr("interface", *service.interface);
    append_policies(service_el, PolicySubjectRef::service_ref(service.name));
    for (const auto& endpoint : service.endpoints) {
      xml::Element endpoint_el("wsdl:endpoint");
      endpoint_el.attr("name", endpoint.name);
      if (endpoint.binding) endpoint_el.attr("binding", *endpoint.binding);
      append_policies(endpoint_el, PolicySubjectRef::endpoint_ref(service.name, endpoint.name));
      service_el.child(std::move(endpoint_el));
    }
    description.child(std::move(service_el));
  }
  return xml::render_document(description, document_entities(config));
}

std::vector<EmittedBundle> emit_bundles(const ServiceModel& model,
                                        const PolicyArtifacts& artifacts,
                                        const EmitConfig& config) {
  std::vector<EmittedBundle> bundles;
  for (const auto& service : model.services) {
    EmittedBundle bundle;
    bundle.service = service.name;

    ServiceModel slice;
    slice.services.push_back(service);
    bundle.wsdl_text = emit_wsdl(slice, artifacts, config);
    bundle.xsd_text = emit_xsd(artifacts.vocabulary_of_service(service.name), config);

    auto collect = [&](const PolicySubjectRef& subject) {
      if (const auto* ids = artifacts.policies_of(subject))
        for (const auto& id : *ids)
          if (const Policy* policy = artifacts.policy_by_id(id))
            bundle.policy_texts[id] = emit_policy(*policy, config);
    };
    collect(PolicySubjectRef::service_ref(service.name));
    for (const auto& endpoint : service.endpoints)
      collect(PolicySubjectRef::endpoint_ref(service.name, endpoint.name));

    bundles.push_back(std::move(bundle));
  }
  return bundles;
}

}  // namespace nfpc
