#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace hgkit::cli {

enum class Command { codegree, tau, cover, sunflower, kernel, cross_max, extremal, verify };
enum class Format { json, table };

struct RunConfig {
  Command command = Command::verify;
  // sunflower: exact | greedy | smallcore; kernel: gen | count | cover
  std::string mode;
  std::vector<std::string> inputs;

  std::optional<int> n, r, k, p, t, N, a;
  std::optional<int> max_core;
  bool iso = false;
  bool naive_check = false;
  bool allow_large = false;

  Format format = Format::json;
  std::string out;         // JSON report destination
  std::string hg_out;      // kernel gen: .hg destination
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;  // seconds
  std::uint64_t seed = 1;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 1;
inline constexpr int precondition = 2;
inline constexpr int limit = 3;
}  // namespace exit_code

struct ParsedArgs {
  std::optional<RunConfig> config;
  int exit_code = exit_code::ok;  // meaningful when config is empty (help, usage errors)
};

// Reads HGKIT_NODE_BUDGET / HGKIT_TIME_BUDGET as defaults; flags override them.
ParsedArgs parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | skipped
  Json params;
  std::string detail;
  double elapsed = 0;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  double budget_seconds = 0;
  std::vector<CheckResult> checks;
  int exit_status() const;
};

VerifySummary verify_all(std::uint64_t seed, double budget_seconds);

}  // namespace hgkit::cli
