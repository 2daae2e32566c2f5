// entwine: verify structure files and print catalogue examples.
//
//   entwine check <file> --suite <name> [--report json|text] [--cutoff N]
//   entwine example <name> [--emit <path>] [--param key=value]...
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "entwine/catalogue.hpp"
#include "entwine/error.hpp"
#include "entwine/suites.hpp"

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

int input_error(const std::string& message) {
  std::cerr << "entwine: " << message << "\n";
  return kInput;
}

int run_check(const std::string& path, const std::string& suite_name, const std::string& format,
              std::optional<std::size_t> cutoff) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return input_error("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();

  const entwine::Suite suite = entwine::parse_suite(suite_name);
  const entwine::Document doc = entwine::parse_document(text.str());
  const entwine::Report report = entwine::run_suite(doc, suite, {cutoff});
  std::cout << (format == "text" ? entwine::render_text(report, doc.field) : entwine::render_json(report, doc.field));
  return report.passed() ? kPass : kFail;
}

int run_example(const std::string& name, const std::string& emit_path, const std::vector<std::string>& raw) {
  entwine::Params params;
  for (const std::string& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) return input_error("--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const std::string text = entwine::emit_document(entwine::build_example(name, params));
  if (emit_path.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream out(emit_path, std::ios::binary);
  if (!out || !(out << text)) return input_error("cannot write " + emit_path);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of entwining structures and Galois (co)extensions"};
  app.require_subcommand(1);

  std::string file, suite, format = "json";
  std::optional<std::size_t> cutoff;
  CLI::App* check = app.add_subcommand("check", "Run a verification suite on a structure file");
  check->add_option("file", file, "Structure file (JSON)")->required();
  check->add_option("--suite", suite, "structures|entwining|galois|cogalois|cogenerate|all")->required();
  check->add_option("--report", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  check->add_option("--cutoff", cutoff, "Chain length cutoff for the cogenerate suite")->check(CLI::PositiveNumber);

  std::string example_name, emit_path;
  std::vector<std::string> params;
  CLI::App* example = app.add_subcommand("example", "Print or write a catalogue example");
  example->add_option("name", example_name, "Example name")->required();
  example->add_option("--emit", emit_path, "Write the document here instead of stdout");
  example->add_option("--param", params, "Example parameter key=value (repeatable)");

  std::ostringstream names;
  for (const std::string& n : entwine::example_names()) names << "\n  " << n;
  example->footer("Examples:" + names.str());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*check) return run_check(file, suite, format, cutoff);
    return run_example(example_name, emit_path, params);
  } catch (const entwine::SchemaError& e) {
    return input_error(std::string("SchemaError: ") + e.what());
  } catch (const entwine::FieldParseError& e) {
    return input_error(std::string("FieldParseError: ") + e.what());
  } catch (const entwine::MissingSection& e) {
    return input_error(e.what());
  } catch (const entwine::UnknownExample& e) {
    return input_error(std::string("UnknownExample: ") + e.what());
  } catch (const entwine::BadParams& e) {
    return input_error(std::string("BadParams: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
}
