#pragma once

// Scenario runner and report documents behind the qcat command-line tool.
//
// Exit codes: 0 pass, 1 negative classification, 2 scenario assertion
// failure, 3 undetermined, 64 usage error, 65 data error.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/catalysis.hpp"
#include "qcat/errors.hpp"
#include "qcat/teleportation.hpp"

namespace qcat {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int assertion_failed = 2;
inline constexpr int undetermined = 3;
inline constexpr int usage = 64;
inline constexpr int data = 65;
}  // namespace exit_code

/// Bad command-line usage: unknown scenario or invalid configuration.
class UsageError : public Error {
public:
  using Error::Error;
};

enum class ReportFormat { json, text };

struct RunConfig {
  double tolerance = kDefaultTolerance;
  ReportFormat format = ReportFormat::json;
  std::uint64_t seed = 0;
  std::size_t steps = 64;

  /// Throws UsageError unless tolerance > 0 and steps >= 2.
  void validate() const;
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One measurement branch of a protocol run, reduced for reporting.
struct BranchSummary {
  std::string input;
  std::vector<int> bits;
  double probability = 0.0;
  double fidelity = 0.0;  // against the ideal protocol output
};

struct ReportDocument {
  std::string schema_version = "1.0";
  std::string scenario;
  std::optional<std::string> source;
  RunConfig config;
  std::optional<CatalysisReport> analysis;
  std::optional<std::vector<DeletionFamilyPoint>> sweep;
  std::optional<ResourceLedger> ledger;
  std::vector<BranchSummary> branches;
  std::vector<Assertion> assertions;
  int exit_code = exit_code::ok;

  bool all_passed() const;
};

inline constexpr std::string_view kScenarioNames[] = {
    "cloning", "deletion", "deletion-sweep", "no-info-cloning", "teleport", "nonlocal-cnot"};

/// Runs a named scenario end to end. exit_code is 0 when every assertion
/// holds and 2 otherwise. Throws UsageError for an unknown name or an
/// invalid config.
ReportDocument run_scenario(std::string_view name, const RunConfig& config);

/// Reads a process-spec file and classifies it. exit_code is 0 for a
/// realizable process with an intact catalyst, 1 for NotCatalysis, 3 for
/// Undetermined. Throws DataError for unreadable or invalid files.
ReportDocument check_spec_file(const std::filesystem::path& path, const RunConfig& config);

/// Same as check_spec_file for an already-built spec.
ReportDocument check_spec(const ProcessSpec& spec, const RunConfig& config);

/// Named specs available to `qcat spec`: cloning, deletion, identity.
/// Throws UsageError for other names.
ProcessSpec named_spec(std::string_view name);

/// JSON output is byte-deterministic: sorted keys, floats in fixed notation
/// with 12 digits after the point.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

/// Fixed 12-decimal rendering used by emit_report; "-0.000000000000" is
/// rendered without the sign.
std::string format_real(double value);

}  // namespace qcat
