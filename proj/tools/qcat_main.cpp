// qcat: decide whether a pure-state transformation is realizable, whether it
// leaves Alice's catalyst intact, and whether it is quantum catalysis.
//
//   qcat run <scenario>   cloning | deletion | deletion-sweep | no-info-cloning
//                         | teleport | nonlocal-cnot
//   qcat check <file>     classify a process-spec JSON file
//   qcat spec <name>      write a named process spec in the file format
//   qcat list             list scenarios

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcat/report.hpp"
#include "qcat/spec_io.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "qcat: cannot write '" << path << "'\n";
    return qcat::exit_code::data;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify quantum catalysis of information for pure-state transformations"};
  app.require_subcommand(1);

  qcat::RunConfig config;
  std::string format = "json";
  std::string output;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", config.tolerance, "Numerical tolerance")->capture_default_str();
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "Seed for sampling and random inputs")
        ->capture_default_str();
    cmd->add_option("--steps", config.steps, "Points in the deletion-family sweep")
        ->capture_default_str();
    cmd->add_option("--output", output, "Write the report here instead of stdout");
  };

  std::string scenario;
  auto* run = app.add_subcommand("run", "Run a named scenario end to end");
  run->add_option("scenario", scenario, "Scenario name")->required();
  add_common(run);

  std::string spec_path;
  auto* check = app.add_subcommand("check", "Classify a process-spec JSON file");
  check->add_option("path", spec_path, "Spec file")->required();
  add_common(check);

  std::string spec_name;
  auto* spec = app.add_subcommand("spec", "Write a named process spec (cloning, deletion, identity)");
  spec->add_option("name", spec_name, "Spec name")->required();
  spec->add_option("--output", output, "Write the spec here instead of stdout");

  auto* list = app.add_subcommand("list", "List scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qcat::exit_code::usage;
  }
  config.format = format == "text" ? qcat::ReportFormat::text : qcat::ReportFormat::json;

  try {
    if (list->parsed()) {
      for (auto name : qcat::kScenarioNames) std::cout << name << "\n";
      return qcat::exit_code::ok;
    }
    if (spec->parsed()) {
      const int rc = write_output(qcat::write_process_spec(qcat::named_spec(spec_name)), output);
      return rc;
    }
    qcat::ReportDocument doc = run->parsed() ? qcat::run_scenario(scenario, config)
                                             : qcat::check_spec_file(spec_path, config);
    if (const int rc = write_output(qcat::emit_report(doc, config.format), output); rc != 0) {
      return rc;
    }
    return doc.exit_code;
  } catch (const qcat::UsageError& e) {
    std::cerr << "qcat: " << e.what() << "\n";
    return qcat::exit_code::usage;
  } catch (const qcat::DataError& e) {
    std::cerr << "qcat: " << e.what() << "\n";
    return qcat::exit_code::data;
  } catch (const std::exception& e) {
    std::cerr << "qcat: internal error: " << e.what() << "\n";
    return qcat::exit_code::assertion_failed;
  }
}
