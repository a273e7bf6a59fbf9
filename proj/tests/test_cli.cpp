#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "qcat/instances.hpp"
#include "qcat/report.hpp"
#include "qcat/spec_io.hpp"
#include "support.hpp"

using namespace qcat;

namespace {

const std::filesystem::path kSpecDir = QCAT_SPEC_DIR;

std::string message_of(std::string_view text) {
  try {
    parse_process_spec(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QCAT_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("qcat_test_" + name);
  std::ofstream(p) << body;
  return p;
}

const char* kTwoPairs = R"({"version":1,"dimA":1,"dimB":2,"pairs":[
  {"in":[[1,0],[0,0]],"out":[[1,0],[0,0]]},
  {"in":[[0,0],[1,0]],"out":[[0,0],[1,0]]}]})";

}  // namespace

TEST(SpecIo, ParsesMinimalSpec) {
  const auto spec = parse_process_spec(kTwoPairs);
  EXPECT_EQ(spec.dim_a(), 1u);
  EXPECT_EQ(spec.dim_b(), 2u);
  EXPECT_EQ(spec.size(), 2u);
}

TEST(SpecIo, ErrorsNameTheField) {
  EXPECT_NE(message_of("{").find("malformed JSON"), std::string::npos);
  EXPECT_NE(message_of(R"({"version":2,"dimA":1,"dimB":2,"pairs":[]})").find("version"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"version":1,"dimB":2,"pairs":[]})").find("dimA"), std::string::npos);
  EXPECT_NE(message_of(R"({"version":1,"dimA":1,"dimB":2,"pairs":[]})").find("pairs"),
            std::string::npos);
  const auto unnormalized = message_of(R"({"version":1,"dimA":1,"dimB":2,"pairs":[
    {"in":[[1,0],[0,0]],"out":[[1,0],[0,0]]},
    {"in":[[0,0],[2,0]],"out":[[0,0],[1,0]]}]})");
  EXPECT_NE(unnormalized.find("pairs[1].in"), std::string::npos) << unnormalized;
  const auto short_array = message_of(R"({"version":1,"dimA":1,"dimB":2,"pairs":[
    {"in":[[1,0]],"out":[[1,0],[0,0]]}]})");
  EXPECT_NE(short_array.find("pairs[0].in"), std::string::npos) << short_array;
  const auto dependent = message_of(R"({"version":1,"dimA":1,"dimB":2,"pairs":[
    {"in":[[1,0],[0,0]],"out":[[1,0],[0,0]]},
    {"in":[[1,0],[0,0]],"out":[[0,0],[1,0]]}]})");
  EXPECT_NE(dependent.find("pairs"), std::string::npos) << dependent;
  EXPECT_THROW(read_process_spec("/nonexistent/spec.json"), DataError);
}

TEST(SpecIo, RoundTripPreservesClassification) {
  std::mt19937_64 rng(601);
  const RunConfig config;
  for (int k = 0; k < 40; ++k) {
    const auto kind = static_cast<qcat_test::SpecKind>(k % 4);
    const auto spec = qcat_test::random_spec(kind, rng);
    const auto again = parse_process_spec(write_process_spec(spec));
    ASSERT_EQ(again.size(), spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
      EXPECT_EQ(again.pairs()[i].input.vector(), spec.pairs()[i].input.vector());
      EXPECT_EQ(again.pairs()[i].output.vector(), spec.pairs()[i].output.vector());
    }
    if (kind == qcat_test::SpecKind::unitary && k % 8 != 0) continue;  // witness search is the slow part
    EXPECT_EQ(emit_report(check_spec(spec, config), ReportFormat::json),
              emit_report(check_spec(again, config), ReportFormat::json));
  }
}

TEST(Report, FormatReal) {
  EXPECT_EQ(format_real(1.0), "1.000000000000");
  EXPECT_EQ(format_real(-1e-15), "0.000000000000");
  EXPECT_EQ(format_real(-0.5), "-0.500000000000");
  EXPECT_EQ(format_real(1.4142135623730951), "1.414213562373");
}

TEST(Report, ConfigValidation) {
  RunConfig c;
  c.tolerance = 0.0;
  EXPECT_THROW(c.validate(), UsageError);
  c = RunConfig{};
  c.steps = 1;
  EXPECT_THROW(c.validate(), UsageError);
  EXPECT_THROW(run_scenario("teleportation", RunConfig{}), UsageError);
  EXPECT_THROW(named_spec("no-info-cloning"), UsageError);
}

TEST(Report, ScenariosPass) {
  for (auto name : kScenarioNames) {
    const auto doc = run_scenario(name, RunConfig{});
    EXPECT_EQ(doc.exit_code, exit_code::ok) << name;
    EXPECT_TRUE(doc.all_passed()) << name;
  }
}

TEST(Report, NamedScenarioContents) {
  const auto cloning = run_scenario("cloning", RunConfig{});
  ASSERT_TRUE(cloning.analysis);
  EXPECT_EQ(cloning.analysis->classification, Classification::quantum_catalysis);
  EXPECT_NEAR(cloning.analysis->witnesses.front().concurrence_out, 1.0, 1e-9);

  const auto no_info = run_scenario("no-info-cloning", RunConfig{});
  ASSERT_TRUE(no_info.analysis);
  EXPECT_EQ(no_info.analysis->classification, Classification::not_catalysis);
  EXPECT_NEAR(no_info.analysis->verdict.certificate->magnitude, std::sqrt(2.0), 1e-9);

  const auto sweep = run_scenario("deletion-sweep", RunConfig{});
  ASSERT_TRUE(sweep.sweep);
  ASSERT_EQ(sweep.sweep->size(), 64u);
  for (std::size_t k = 0; k < 64; ++k)
    EXPECT_EQ((*sweep.sweep)[k].out_concurrence <= 1e-9, k == 32) << k;
}

TEST(Report, JsonIsByteDeterministic) {
  for (auto name : {"cloning", "no-info-cloning", "teleport"}) {
    const auto a = emit_report(run_scenario(name, RunConfig{}), ReportFormat::json);
    const auto b = emit_report(run_scenario(name, RunConfig{}), ReportFormat::json);
    EXPECT_EQ(a, b) << name;
  }
  const auto text = emit_report(run_scenario("cloning", RunConfig{}), ReportFormat::text);
  EXPECT_NE(text.find("[PASS]"), std::string::npos);
}

TEST(Report, JsonShape) {
  const auto json = emit_report(run_scenario("cloning", RunConfig{}), ReportFormat::json);
  EXPECT_NE(json.find("\"schema_version\": \"1.0\""), std::string::npos);
  EXPECT_NE(json.find("\"classification\": \"QuantumCatalysis\""), std::string::npos) << json;
  EXPECT_LT(json.find("\"assertions\""), json.find("\"scenario\""));
}

TEST(CheckSpec, FilesMatchScenarios) {
  const RunConfig config;
  const auto cloning = check_spec_file(kSpecDir / "cloning.json", config);
  EXPECT_EQ(cloning.exit_code, exit_code::ok);
  EXPECT_EQ(cloning.analysis->classification, Classification::quantum_catalysis);
  const auto direct = check_spec(instances::cloning_spec(), config);
  EXPECT_EQ(cloning.analysis->witnesses.front().input.vector(),
            direct.analysis->witnesses.front().input.vector());

  const auto identity = check_spec_file(kSpecDir / "identity.json", config);
  EXPECT_EQ(identity.exit_code, exit_code::ok);
  EXPECT_EQ(identity.analysis->classification, Classification::no_entangling_witness_found);

  const auto not_catalysis = check_spec(
      ProcessSpec(2, 2, {{tensor(ket_zero(), ket_zero()), tensor(ket_one(), ket_zero())}}),
      config);
  EXPECT_EQ(not_catalysis.exit_code, exit_code::negative);
}

TEST(CheckSpec, UndeterminedExitCode) {
  std::vector<ProcessPair> pairs;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto s = PureState({1, 4}, DenseVector::Unit(4, static_cast<Eigen::Index>(i)));
    const auto t = PureState({1, 4}, DenseVector::Unit(4, static_cast<Eigen::Index>((i + 1) % 4)));
    pairs.push_back({s, t});
  }
  const auto doc = check_spec(ProcessSpec(1, 4, pairs), RunConfig{});
  EXPECT_EQ(doc.analysis->verdict.status, FeasibilityStatus::undetermined);
  EXPECT_EQ(doc.exit_code, exit_code::undetermined);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("list"), 0);
  EXPECT_EQ(run_cli("run cloning"), 0);
  EXPECT_EQ(run_cli("run no-info-cloning --format text"), 0);
  EXPECT_EQ(run_cli("run bogus"), 64);
  EXPECT_EQ(run_cli("run cloning --tolerance -1"), 64);
  EXPECT_EQ(run_cli("run deletion-sweep --steps 1"), 64);
  EXPECT_EQ(run_cli("run cloning --format yaml"), 64);
  EXPECT_EQ(run_cli(""), 64);
  EXPECT_EQ(run_cli("check " + (kSpecDir / "identity.json").string()), 0);
  EXPECT_EQ(run_cli("check /nonexistent/spec.json"), 65);
  const auto bad = temp_file("unnormalized.json", R"({"version":1,"dimA":1,"dimB":2,"pairs":[
    {"in":[[1,0],[1,0]],"out":[[1,0],[0,0]]}]})");
  EXPECT_EQ(run_cli("check " + bad.string()), 65);
  const auto flip = temp_file("flip.json", R"({"version":1,"dimA":2,"dimB":1,"pairs":[
    {"in":[[1,0],[0,0]],"out":[[0,0],[1,0]]}]})");
  EXPECT_EQ(run_cli("check " + flip.string()), 1);
  EXPECT_EQ(run_cli("spec cloning"), 0);
  EXPECT_EQ(run_cli("spec no-info-cloning"), 64);
}

TEST(Cli, OutputFileIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "qcat_test_a.json";
  const auto b = dir / "qcat_test_b.json";
  ASSERT_EQ(run_cli("run deletion --output " + a.string()), 0);
  ASSERT_EQ(run_cli("run deletion --output " + b.string()), 0);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
}
