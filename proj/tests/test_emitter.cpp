#include <doctest.h>

#include <set>

#include "nfpc/emitter.hpp"
#include "nfpc/service_model.hpp"
#include "nfpc/transform.hpp"
#include "support/paths.hpp"
#include "support/xml_doc.hpp"

using namespace nfpc;
using nfpc::test::XmlDoc;
using nfpc::test::XmlNode;
using nfpc::test::parse_xml;

namespace {

const NfpTypeLibrary& types() {
  static NfpTypeLibrary lib = NfpTypeLibrary::builtin();
  return lib;
}

ServiceModel fixture_model() {
  auto parsed = parse_model(test::read_file(test::fixture_path("flight_service.model")),
                            types());
  REQUIRE(parsed.ok());
  return parsed.value();
}

PolicyArtifacts fixture_artifacts(const ServiceModel& model) {
  auto artifacts = transform_model(model, types());
  REQUIRE(artifacts.ok());
  return artifacts.value();
}

// every '&' must begin an entity reference
void check_entity_hygiene(const std::string& text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') continue;
    size_t semi = text.find(';', i);
    REQUIRE(semi != std::string::npos);
    for (size_t k = i + 1; k < semi; ++k) REQUIRE(std::isalpha(static_cast<unsigned char>(text[k])));
    REQUIRE(semi > i + 1);
  }
}

}  // namespace

TEST_CASE("emit_xsd: one complex type and element per vocabulary item") {
  auto model = fixture_model();
  auto artifacts = fixture_artifacts(model);
  EmitConfig config;
  auto text = emit_xsd(artifacts.vocabulary_of_service("FlightService1"), config);

  auto doc = parse_xml(text);
  CHECK(doc.root.name == "xsd:schema");
  CHECK(*doc.root.attr("targetNamespace") == "http://example.org/nfp/types");

  auto complex_types = doc.root.find_all("xsd:complexType");
  REQUIRE(complex_types.size() == 3);
  CHECK(*complex_types[0]->attr("name") == "Price");
  CHECK(*complex_types[1]->attr("name") == "Availability");
  CHECK(*complex_types[2]->attr("name") == "Delay");

  auto price_elements = complex_types[0]->find_all("xsd:element");
  REQUIRE(price_elements.size() == 2);
  CHECK(*price_elements[0]->attr("name") == "PriceValue");
  CHECK(*price_elements[0]->attr("type") == "xsd:double");
  CHECK(*price_elements[1]->attr("name") == "PriceUnit");
  CHECK(*price_elements[1]->attr("type") == "xsd:string");

  auto avail_elements = complex_types[1]->find_all("xsd:element");
  CHECK(*avail_elements[0]->attr("type") == "xsd:integer");

  SUBCASE("semantic annotation sits on exactly one element declaration") {
    size_t with_reference = 0;
    for (const auto* element : doc.root.find_all("xsd:element"))
      if (element->attr("sawsdl:modelReference")) {
        ++with_reference;
        CHECK(*element->attr("name") == "Delay");
        CHECK(*element->attr("sawsdl:modelReference") ==
              "http://ontologies.example.org/qos#Delay");
      }
    CHECK(with_reference == 1);
  }

  SUBCASE("lowering and lifting schemas become sawsdl attributes") {
    VocabularyItem item;
    item.name = "Thing";
    item.xsd_value_type = XsdType::String;
    item.has_unit = false;
    item.semantic = SemanticAnnotation{"http://onto.example/#T",
                                       "http://onto.example/lower.xq",
                                       "http://onto.example/lift.xq"};
    auto annotated = emit_xsd({item}, config);
    auto adoc = parse_xml(annotated);
    const nfpc::test::XmlNode* element = nullptr;  // the global declaration, not the Value child
    for (const auto* candidate : adoc.root.find_all("xsd:element"))
      if (candidate->attr("name") && *candidate->attr("name") == "Thing") element = candidate;
    REQUIRE(element);
    REQUIRE(element->attr("sawsdl:loweringSchemaMapping"));
    CHECK(*element->attr("sawsdl:loweringSchemaMapping") == "http://onto.example/lower.xq");
    REQUIRE(element->attr("sawsdl:liftingSchemaMapping"));
    CHECK(*element->attr("sawsdl:liftingSchemaMapping") == "http://onto.example/lift.xq");
    // unitless item: no Unit child element
    CHECK(adoc.root.first("xsd:complexType")->find_all("xsd:element").size() == 1);
  }

  SUBCASE("empty vocabulary still yields a well-formed schema") {
    auto empty = emit_xsd({}, config);
    auto edoc = parse_xml(empty);
    CHECK(edoc.root.name == "xsd:schema");
    CHECK(edoc.root.children.empty());
  }
}

TEST_CASE("emit_policy: normal form with verbatim literals") {
  auto model = fixture_model();
  auto artifacts = fixture_artifacts(model);
  EmitConfig config;

  const auto* service_policy = artifacts.policy_by_id("FlightService1NFPsPolicy");
  REQUIRE(service_policy);
  auto text = emit_policy(*service_policy, config);

  // written precision survives into the document bytes
  CHECK(text.find(">200.00</AttributeValue>") != std::string::npos);
  CHECK(text.find("<?xml version=\"1.0\" encoding=\"UTF-8\"?>") == 0);

  auto doc = parse_xml(text);
  CHECK(doc.root.name == "wsp:Policy");
  CHECK(*doc.root.attr("wsu:Id") == "FlightService1NFPsPolicy");
  REQUIRE(doc.root.children.size() == 1);
  CHECK(doc.root.children[0].name == "wsp:ExactlyOne");

  auto applies = doc.root.find_all("Apply");
  REQUIRE(applies.size() == 4);
  CHECK(*applies[0]->attr("FunctionId") ==
        "urn:oasis:names:tc:xacml:1.0:function:double-equals");
  const auto* value = applies[0]->first("AttributeValue");
  REQUIRE(value);
  CHECK(value->text == "200.00");
  // the oracle expands the &xsd; entity declared in the internal subset
  CHECK(*value->attr("DataType") == "http://www.w3.org/2001/XMLSchema#double");
  const auto* designator = applies[0]->first("ResourceAttributeDesignator");
  REQUIRE(designator);
  CHECK(*designator->attr("AttributeId") == "Price/PriceValue");
  CHECK(*designator->attr("DataType") == "http://www.w3.org/2001/XMLSchema#double");

  CHECK(*applies[1]->attr("FunctionId") ==
        "urn:oasis:names:tc:xacml:1.0:function:string-equals");
  CHECK(applies[1]->first("AttributeValue")->text == "$US");
  CHECK(*applies[2]->attr("FunctionId") ==
        "urn:oasis:names:tc:xacml:1.0:function:integer-greater-than-or-equals");
  CHECK(applies[2]->first("AttributeValue")->text == "90");

  SUBCASE("offered policy carries the vacuous <wsp:All/>") {
    const auto* endpoint_policy = artifacts.policy_by_id("FlightServiceEndpoint1NFPsPolicy");
    REQUIRE(endpoint_policy);
    auto offered = emit_policy(*endpoint_policy, config);
    CHECK(offered.find("<wsp:All/>") != std::string::npos);
    auto odoc = parse_xml(offered);
    auto alls = odoc.root.find_all("wsp:All");
    REQUIRE(alls.size() == 2);
    CHECK(alls[0]->find_all("Apply").size() == 2);
    CHECK(alls[1]->children.empty());
  }

  SUBCASE("vacuous-only policy") {
    Policy vacuous;
    vacuous.id = "Nothing";
    vacuous.subject = PolicySubjectRef::service_ref("S");
    vacuous.alternatives.push_back(PolicyAlternative{});
    auto vtext = emit_policy(vacuous, config);
    auto vdoc = parse_xml(vtext);
    REQUIRE(vdoc.root.children.size() == 1);
    REQUIRE(vdoc.root.children[0].children.size() == 1);
    CHECK(vdoc.root.children[0].children[0].name == "wsp:All");
    CHECK(vdoc.root.children[0].children[0].children.empty());
  }
}

TEST_CASE("function-id rendering modes") {
  auto model = fixture_model();
  auto artifacts = fixture_artifacts(model);
  const auto* policy = artifacts.policy_by_id("FlightService1NFPsPolicy");
  REQUIRE(policy);

  SUBCASE("paper entity mode emits wspc&function;NAME verbatim") {
    EmitConfig config;
    config.function_id_mode = FunctionIdMode::PaperEntity;
    auto text = emit_policy(*policy, config);
    CHECK(text.find("FunctionId=\"wspc&function;double-equals\"") != std::string::npos);
    CHECK(text.find("<!ENTITY function") != std::string::npos);
    auto doc = parse_xml(text);  // stays well-formed thanks to the declaration
    CHECK(*doc.root.find_all("Apply")[0]->attr("FunctionId") ==
          "wspc:function:double-equals");
  }
  SUBCASE("urn mode spells the full XACML function urn") {
    EmitConfig config;
    auto text = emit_policy(*policy, config);
    CHECK(text.find("wspc&function;") == std::string::npos);
    CHECK(text.find("urn:oasis:names:tc:xacml:1.0:function:double-equals") !=
          std::string::npos);
    check_entity_hygiene(text);
  }
}

TEST_CASE("emit_wsdl: subjects wrap their policies inline") {
  auto model = fixture_model();
  auto artifacts = fixture_artifacts(model);
  EmitConfig config;
  auto text = emit_wsdl(model, artifacts, config);

  auto doc = parse_xml(text);
  CHECK(doc.root.name == "wsdl:description");

  const auto* types_el = doc.root.first("wsdl:types");
  REQUIRE(types_el);
  const auto* import = types_el->first("xsd:import");
  REQUIRE(import);
  CHECK(*import->attr("schemaLocation") == "FlightService1-types.xsd");

  const auto* service = doc.root.first("wsdl:service");
  REQUIRE(service);
  CHECK(*service->attr("name") == "FlightService1");
  CHECK(*service->attr("interface") == "FlightServiceInterface");

  // service policy appears before the endpoint element
  REQUIRE(service->children.size() == 2);
  CHECK(service->children[0].name == "wsp:Policy");
  CHECK(*service->children[0].attr("wsu:Id") == "FlightService1NFPsPolicy");
  CHECK(service->children[1].name == "wsdl:endpoint");
  CHECK(*service->children[1].attr("name") == "FlightServiceEndpoint1");
  CHECK(*service->children[1].attr("binding") == "FlightServiceBinding");
  REQUIRE(service->children[1].children.size() == 1);
  CHECK(*service->children[1].children[0].attr("wsu:Id") ==
        "FlightServiceEndpoint1NFPsPolicy");

  // all six Apply functions, in document order
  auto applies = doc.root.find_all("Apply");
  REQUIRE(applies.size() == 6);

  SUBCASE("embedded policies equal the standalone documents structurally") {
    for (const char* id : {"FlightService1NFPsPolicy", "FlightServiceEndpoint1NFPsPolicy"}) {
      auto standalone = parse_xml(emit_policy(*artifacts.policy_by_id(id), config));
      const XmlNode* embedded = nullptr;
      for (const auto* candidate : doc.root.find_all("wsp:Policy"))
        if (candidate->attr("wsu:Id") && *candidate->attr("wsu:Id") == id)
          embedded = candidate;
      REQUIRE(embedded);
      REQUIRE(embedded->children.size() == 1);
      CHECK(nfpc::test::structurally_equal(standalone.root.children[0],
                                           embedded->children[0]));
    }
  }

  SUBCASE("every AttributeId resolves into the emitted schema") {
    auto xsd_doc = parse_xml(emit_xsd(artifacts.vocabulary_of_service("FlightService1"),
                                      config));
    std::set<std::string> declared;
    for (const auto* complex_type : xsd_doc.root.find_all("xsd:complexType"))
      for (const auto* element : complex_type->find_all("xsd:element"))
        declared.insert(*complex_type->attr("name") + "/" + *element->attr("name"));
    for (const auto* apply : applies) {
      const auto* designator = apply->first("ResourceAttributeDesignator");
      REQUIRE(designator);
      CHECK(declared.count(*designator->attr("AttributeId")) == 1);
    }
  }

  SUBCASE("no constraints, no wsp:Policy children") {
    auto plain = parse_model("service S { nfp A : NFP_Real endpoint E { } }", types());
    REQUIRE(plain.ok());
    auto plain_artifacts = transform_model(plain.value(), types());
    REQUIRE(plain_artifacts.ok());
    auto plain_text = emit_wsdl(plain.value(), plain_artifacts.value(), config);
    auto plain_doc = parse_xml(plain_text);
    CHECK(plain_doc.root.find_all("wsp:Policy").empty());
    CHECK(plain_doc.root.first("wsdl:endpoint") != nullptr);
  }
}

TEST_CASE("bundles slice a multi-service model per service") {
  // the same NFP name in two services must stay scoped to its own bundle
  auto parsed = parse_model(
      "service Alpha {\n"
      "  nfp Price : NFP_Price\n"
      "  constraint required AlphaPrice : Price < (10, \"EUR\")\n"
      "}\n"
      "service Beta {\n"
      "  nfp Price : NFP_Price\n"
      "  nfp Rate : NFP_Frequency\n"
      "}\n",
      types());
  REQUIRE(parsed.ok());
  REQUIRE(validate_model(parsed.value(), types()).empty());
  auto artifacts = transform_model(parsed.value(), types());
  REQUIRE(artifacts.ok());

  EmitConfig config;
  auto bundles = emit_bundles(parsed.value(), artifacts.value(), config);
  REQUIRE(bundles.size() == 2);
  CHECK(bundles[0].service == "Alpha");
  CHECK(bundles[1].service == "Beta");

  auto alpha_xsd = parse_xml(bundles[0].xsd_text);
  CHECK(alpha_xsd.root.find_all("xsd:complexType").size() == 1);
  auto beta_xsd = parse_xml(bundles[1].xsd_text);
  CHECK(beta_xsd.root.find_all("xsd:complexType").size() == 2);

  auto alpha_wsdl = parse_xml(bundles[0].wsdl_text);
  CHECK(alpha_wsdl.root.find_all("wsdl:service").size() == 1);
  CHECK(*alpha_wsdl.root.first("wsdl:service")->attr("name") == "Alpha");
  CHECK(alpha_wsdl.root.find_all("wsp:Policy").size() == 1);
  auto beta_wsdl = parse_xml(bundles[1].wsdl_text);
  CHECK(*beta_wsdl.root.first("wsdl:service")->attr("name") == "Beta");
  CHECK(beta_wsdl.root.find_all("wsp:Policy").empty());

  CHECK(bundles[0].policy_texts.count("AlphaPrice") == 1);
  CHECK(bundles[1].policy_texts.empty());
}

TEST_CASE("emission is deterministic byte for byte") {
  auto model = fixture_model();
  auto artifacts_a = fixture_artifacts(model);
  auto artifacts_b = fixture_artifacts(fixture_model());
  EmitConfig config;

  CHECK(emit_wsdl(model, artifacts_a, config) == emit_wsdl(fixture_model(), artifacts_b, config));
  auto bundles_a = emit_bundles(model, artifacts_a, config);
  auto bundles_b = emit_bundles(model, artifacts_b, config);
  REQUIRE(bundles_a.size() == bundles_b.size());
  for (size_t i = 0; i < bundles_a.size(); ++i) {
    CHECK(bundles_a[i].wsdl_text == bundles_b[i].wsdl_text);
    CHECK(bundles_a[i].xsd_text == bundles_b[i].xsd_text);
    CHECK(bundles_a[i].policy_texts == bundles_b[i].policy_texts);
  }
}

TEST_CASE("XML escaping round-trips through the reparse oracle") {
  VocabularyItem tier;
  tier.name = "Tier";
  tier.xsd_value_type = XsdType::String;
  tier.has_unit = false;
  tier.service = "S";

  auto assertion = lower_relation(
      vsl::Rel{"Tier", vsl::RelOp::Eq, vsl::Literal::text("<gold> & \"quoted\"")}, tier);
  REQUIRE(assertion.ok());
  Policy policy;
  policy.id = "Escapes";
  policy.subject = PolicySubjectRef::service_ref("S");
  policy.alternatives.push_back(PolicyAlternative{{assertion.value()}});

  EmitConfig config;
  auto text = emit_policy(policy, config);
  auto doc = parse_xml(text);
  const auto* value = doc.root.find_all("Apply")[0]->first("AttributeValue");
  REQUIRE(value);
  CHECK(value->text == "<gold> & \"quoted\"");
  check_entity_hygiene(text);
}
