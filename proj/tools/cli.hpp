#ifndef ICIS_TOOLS_CLI_HPP
#define ICIS_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "icis/index.hpp"

namespace icis::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kBudgetExceeded = 2,
  kOracleDisagreement = 3,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ComputeOptions {
  bool with_oracle = false;
  std::filesystem::path out_path;  // empty: write to `out`
  unsigned max_truncation = oracle::kDefaultMaxTruncation;
  std::uint64_t budget_steps = Budget{}.max_reduction_steps;
};

int run_compute(const std::filesystem::path& problem, const ComputeOptions& options, std::ostream& out,
                std::ostream& err);

// Runs every `<name>.json` in `dir` (except `*.expected.json`) with the oracle
// and compares against `<name>.expected.json`. Prints one row per problem.
int run_corpus(const std::filesystem::path& dir, unsigned jobs, std::ostream& out, std::ostream& err);

}  // namespace icis::cli

#endif  // ICIS_TOOLS_CLI_HPP
