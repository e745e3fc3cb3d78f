#include "nfpc/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nfpc/emitter.hpp"
#include "nfpc/nfp_type_library.hpp"
#include "nfpc/policy_model.hpp"
#include "nfpc/service_model.hpp"
#include "nfpc/transform.hpp"

namespace nfpc {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitType = 2;
constexpr int kExitIo = 3;
constexpr int kExitUnsatisfied = 4;
constexpr int kExitEval = 5;

struct CliError {
  int code;
  std::string message;
};

Result<std::string, CliError> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return CliError{kExitIo, "cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_parse_error(const std::string& path, const ParseError& error) {
  return path + ":" + std::to_string(error.pos.line) + ":" + std::to_string(error.pos.column) +
         ": error: " + error.message;
}

Result<NfpTypeLibrary, CliError> load_types(const std::string& types_lib_flag,
                                            std::ostream& err) {
  NfpTypeLibrary types = NfpTypeLibrary::builtin();
  std::string path = types_lib_flag;
  if (path.empty())
    if (const char* env = std::getenv("NFPC_TYPES_LIB")) path = env;
  if (path.empty()) return types;

  auto text = read_file(path);
  if (!text) return text.error();
  auto loaded = types.load_extensions(text.value());
  if (!loaded) return CliError{kExitParse, format_parse_error(path, loaded.error())};
  (void)err;
  return types;
}

struct CompiledModel {
  ServiceModel model;
  PolicyArtifacts artifacts;
};

Result<CompiledModel, CliError> compile_model(const std::string& model_path,
                                              const NfpTypeLibrary& types) {
  auto text = read_file(model_path);
  if (!text) return text.error();

  auto parsed = parse_model(text.value(), types);
  if (!parsed) return CliError{kExitParse, format_parse_error(model_path, parsed.error())};

  auto diagnostics = validate_model(parsed.value(), types);
  if (!diagnostics.empty()) {
    std::string message;
    for (const auto& d : diagnostics) {
      if (!message.empty()) message += '\n';
      message += model_path + ": " + d.subject + ": " + d.message;
    }
    return CliError{kExitParse, message};
  }

  auto artifacts = transform_model(parsed.value(), types);
  if (!artifacts)
    return CliError{kExitType, model_path + ": " + artifacts.error().subject + ": " +
                                   artifacts.error().message};
  return CompiledModel{std::move(parsed).value(), std::move(artifacts).value()};
}

int run_compile(const std::string& model_path, const std::string& out_dir,
                const std::string& function_ids, bool split_policies,
                const std::string& types_lib, std::ostream& out, std::ostream& err) {
  auto types = load_types(types_lib, err);
  if (!types) {
    err << types.error().message << "\n";
    return types.error().code;
  }
  auto compiled = compile_model(model_path, types.value());
  if (!compiled) {
    err << compiled.error().message << "\n";
    return compiled.error().code;
  }

  EmitConfig config;
  config.function_id_mode =
      function_ids == "entity" ? FunctionIdMode::PaperEntity : FunctionIdMode::XacmlUrn;

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    err << "cannot create output directory '" << out_dir << "': " << ec.message() << "\n";
    return kExitIo;
  }

  auto write_out = [&](const std::string& name, const std::string& content) -> bool {
    fs::path path = fs::path(out_dir) / name;
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) {
      err << "cannot write '" << path.string() << "'\n";
      return false;
    }
    out << "WROTE " << (fs::path(out_dir) / name).generic_string() << "\n";
    return true;
  };

  for (const auto& bundle :
       emit_bundles(compiled.value().model, compiled.value().artifacts, config)) {
    if (!write_out(bundle.service + ".wsdl", bundle.wsdl_text)) return kExitIo;
    if (!write_out(bundle.service + "-types.xsd", bundle.xsd_text)) return kExitIo;
    if (split_policies)
      for (const auto& [id, text] : bundle.policy_texts)
        if (!write_out(id + ".xml", text)) return kExitIo;
  }
  return kExitOk;
}

int run_validate(const std::string& model_path, const std::string& types_lib,
                 std::ostream& /*out*/, std::ostream& err) {
  auto types = load_types(types_lib, err);
  if (!types) {
    err << types.error().message << "\n";
    return types.error().code;
  }
  auto text = read_file(model_path);
  if (!text) {
    err << text.error().message << "\n";
    return text.error().code;
  }
  auto parsed = parse_model(text.value(), types.value());
  if (!parsed) {
    err << format_parse_error(model_path, parsed.error()) << "\n";
    return kExitParse;
  }

  auto diagnostics = validate_model(parsed.value(), types.value());
  auto type_diagnostics = check_model_types(parsed.value(), types.value());
  diagnostics.insert(diagnostics.end(), type_diagnostics.begin(), type_diagnostics.end());
  if (!diagnostics.empty()) {
    for (const auto& d : diagnostics)
      err << model_path << ": " << d.subject << ": " << d.message << "\n";
    return kExitParse;
  }
  return kExitOk;
}

int run_eval(const std::string& model_path, const std::string& subject_name,
             const std::string& values_path, const std::string& kind_filter,
             bool strict_offered, const std::string& types_lib, std::ostream& out,
             std::ostream& err) {
  auto types = load_types(types_lib, err);
  if (!types) {
    err << types.error().message << "\n";
    return types.error().code;
  }
  auto compiled = compile_model(model_path, types.value());
  if (!compiled) {
    err << compiled.error().message << "\n";
    return compiled.error().code;
  }
  const auto& model = compiled.value().model;
  const auto& artifacts = compiled.value().artifacts;

  auto values_text = read_file(values_path);
  if (!values_text) {
    err << values_text.error().message << "\n";
    return values_text.error().code;
  }
  auto valuation = Valuation::parse(values_text.value());
  if (!valuation) {
    err << format_parse_error(values_path, valuation.error()) << "\n";
    return kExitParse;
  }

  // services first, then endpoints, in declaration order
  std::optional<PolicySubjectRef> subject;
  for (const auto& service : model.services)
    if (service.name == subject_name) subject = PolicySubjectRef::service_ref(service.name);
  if (!subject)
    for (const auto& service : model.services)
      for (const auto& endpoint : service.endpoints)
        if (endpoint.name == subject_name)
          subject = PolicySubjectRef::endpoint_ref(service.name, endpoint.name);
  if (!subject) {
    err << model_path << ": no service or endpoint named '" << subject_name << "'\n";
    return kExitParse;
  }

  auto kind_selected = [&](ConstraintKind kind) {
    if (kind_filter == "all") return true;
    if (kind_filter == "offered") return kind == ConstraintKind::Offered;
    // contract constraints carry required semantics
    return kind == ConstraintKind::Required || kind == ConstraintKind::Contract;
  };

  const auto* ids = artifacts.policies_of(*subject);
  bool all_satisfied = true;
  if (ids)
    for (const auto& id : *ids) {
      const Policy* policy = artifacts.policy_by_id(id);
      if (!policy || !kind_selected(policy->kind)) continue;

      Policy view = *policy;
      if (strict_offered && policy->kind == ConstraintKind::Offered) {
        view.alternatives.clear();
        for (const auto& alternative : policy->alternatives)
          if (!alternative.assertions.empty()) view.alternatives.push_back(alternative);
      }

      auto report = evaluate(view, valuation.value());
      if (!report) {
        err << id << ": " << report.error().message << "\n";
        return kExitEval;
      }
      if (report.value().satisfied) {
        out << "SATISFIED " << id << "\n";
      } else {
        all_satisfied = false;
        out << "UNSATISFIED " << id << "\n";
        for (const auto& failure : report.value().failures)
          out << "  alternative " << failure.alternative << ": " << failure.operator_name
              << " on " << failure.attribute_id << "\n";
      }
    }
  return all_satisfied ? kExitOk : kExitUnsatisfied;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"NFP model compiler: service models to WS-Policy/SAWSDL artifacts"};
  app.require_subcommand(1);

  std::string model_path, out_dir, types_lib, values_path, subject_name;
  std::string function_ids = "urn";
  std::string kind_filter = "all";
  bool split_policies = false;
  bool strict_offered = false;

  auto* compile = app.add_subcommand("compile", "compile a model to WSDL/XSD/policy files");
  compile->add_option("model", model_path, "model file")->required();
  compile->add_option("--out-dir", out_dir, "output directory")->required();
  compile->add_option("--function-ids", function_ids, "FunctionId rendering: entity or urn")
      ->check(CLI::IsMember({"entity", "urn"}));
  compile->add_flag("--split-policies", split_policies,
                    "additionally write each policy as a standalone file");
  compile->add_option("--types-lib", types_lib, "NFP type library extension file");

  auto* validate = app.add_subcommand("validate", "parse and validate a model");
  validate->add_option("model", model_path, "model file")->required();
  validate->add_option("--types-lib", types_lib, "NFP type library extension file");

  auto* eval = app.add_subcommand("eval", "evaluate a subject's policies against values");
  eval->add_option("model", model_path, "model file")->required();
  eval->add_option("--subject", subject_name, "service or endpoint name")->required();
  eval->add_option("--values", values_path, "valuation file")->required();
  eval->add_option("--kind", kind_filter, "constraint kinds to evaluate")
      ->check(CLI::IsMember({"required", "offered", "all"}));
  eval->add_flag("--strict-offered", strict_offered,
                 "evaluate offered policies without their vacuous alternative");
  eval->add_option("--types-lib", types_lib, "NFP type library extension file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (compile->parsed())
    return run_compile(model_path, out_dir, function_ids, split_policies, types_lib, out, err);
  if (validate->parsed()) return run_validate(model_path, types_lib, out, err);
  return run_eval(model_path, subject_name, values_path, kind_filter, strict_offered, types_lib,
                  out, err);
}

}  // namespace nfpc
