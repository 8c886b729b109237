#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "problem_file.hpp"

namespace icis::cli {

namespace {

namespace fs = std::filesystem;

std::string index_text(const std::optional<std::uint64_t>& index) {
  return index ? std::to_string(*index) : std::string("infinite");
}

struct CorpusRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> staircase_strings(const IndexResult& r, const Ring& ring) {
  std::vector<std::string> out;
  for (const auto& m : r.staircase) out.push_back(m.to_string(ring));
  return out;
}

Json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError({path.filename().string() + ": cannot open file"});
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError({path.filename().string() + ": " + e.what()});
  }
}

CorpusRow run_entry(const fs::path& problem) {
  CorpusRow row{problem.filename().string(), false, {}};
  try {
    fs::path side = problem;
    side.replace_extension(".expected.json");
    if (!fs::exists(side)) {
      row.detail = "missing expected-result file " + side.filename().string();
      return row;
    }
    const ExpectedResult expected = decode_expected(read_json(side));
    const ProblemSpec spec = read_problem_file(problem);
    IndexOptions options;
    options.with_oracle = true;
    const IndexResult result = compute_index(spec, options);
    const auto stairs = staircase_strings(result, *spec.ring);
    std::ostringstream detail;
    if (result.index != expected.index) {
      detail << "expected index " << index_text(expected.index) << ", got " << index_text(result.index);
    } else if (stairs != expected.staircase) {
      detail << "staircase differs from " << side.filename().string();
    } else if (result.oracle->agreement != OracleAgreement::agree) {
      detail << "oracle " << to_string(result.oracle->agreement) << " ("
             << oracle::to_string(result.oracle->report.verdict) << ")";
    } else {
      row.pass = true;
      detail << "index=" << index_text(result.index) << " oracle=agree";
    }
    row.detail = detail.str();
  } catch (const OracleDisagreement& e) {
    const auto& r = e.result();
    row.detail = "oracle disagreement: pipeline " + index_text(r.index) + ", oracle " +
                 oracle::to_string(r.oracle->report.verdict) +
                 (r.oracle->report.value ? " " + std::to_string(*r.oracle->report.value) : std::string());
  } catch (const std::exception& e) {
    row.detail = e.what();
    std::replace(row.detail.begin(), row.detail.end(), '\n', ' ');
  }
  return row;
}

}  // namespace

int run_compute(const fs::path& problem, const ComputeOptions& options, std::ostream& out, std::ostream& err) {
  ProblemSpec spec;
  try {
    spec = read_problem_file(problem);
  } catch (const FormatError& e) {
    err << problem.string() << ": " << e.what() << '\n';
    return kInvalidInput;
  }
  if (auto violations = validate(spec); !violations.empty()) {
    err << problem.string() << ": invalid problem\n";
    for (const auto& v : violations) err << "  [" << to_string(v.kind) << "] " << v.message << '\n';
    return kInvalidInput;
  }

  IndexOptions index_options;
  index_options.with_oracle = options.with_oracle;
  index_options.max_truncation = options.max_truncation;
  index_options.budget.max_reduction_steps = options.budget_steps;

  IndexResult result;
  int code = kOk;
  try {
    result = compute_index(spec, index_options);
  } catch (const ResourceLimitExceeded& e) {
    err << problem.string() << ": resource budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const OracleDisagreement& e) {
    err << problem.string() << ": " << e.what() << '\n';
    result = e.result();
    code = kOracleDisagreement;
  }

  const Timings timings{result.basis_seconds * 1e3, result.oracle_seconds * 1e3};
  const std::string text = encode_result(result, *spec.ring, timings).dump(2) + "\n";
  if (options.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(options.out_path, std::ios::binary);
    if (!(file << text)) {
      err << options.out_path.string() << ": cannot write result\n";
      return kInvalidInput;
    }
  }
  return code;
}

int run_corpus(const fs::path& dir, unsigned jobs, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) {
    err << dir.string() << ": not a directory\n";
    return kInvalidInput;
  }
  std::vector<fs::path> problems;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    if (name.size() >= 14 && name.ends_with(".expected.json")) continue;
    problems.push_back(entry.path());
  }
  std::sort(problems.begin(), problems.end());

  std::vector<CorpusRow> rows(problems.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < problems.size();) rows[i] = run_entry(problems[i]);
  };
  {
    const auto count = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(problems.size(), 1));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }

  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::size_t passed = 0;
  out << "STATUS  " << std::left << std::setw(static_cast<int>(width)) << "FILE" << "  DETAIL\n";
  for (const auto& r : rows) {
    passed += r.pass;
    out << (r.pass ? "PASS    " : "FAIL    ") << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
        << r.detail << '\n';
  }
  out << passed << "/" << rows.size() << " passed\n";
  return passed == rows.size() ? kOk : kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index of collections of 1-forms on isolated complete intersection singularities"};
  app.require_subcommand(1);

  ComputeOptions compute;
  std::string problem;
  std::string out_path;
  auto* compute_cmd = app.add_subcommand("compute", "Compute the index for one problem file");
  compute_cmd->add_option("file", problem, "Problem file (JSON)")->required();
  compute_cmd->add_flag("--oracle", compute.with_oracle, "Cross-check against the truncation oracle");
  compute_cmd->add_option("--out", out_path, "Write the result here instead of standard output");
  compute_cmd->add_option("--max-truncation", compute.max_truncation, "Largest truncation degree for the oracle")
      ->check(CLI::PositiveNumber);
  compute_cmd->add_option("--budget", compute.budget_steps, "Reduction step budget for the standard basis")
      ->check(CLI::PositiveNumber);

  std::string corpus_dir;
  unsigned jobs = 1;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run a directory of problems against expected results");
  corpus_cmd->add_option("dir", corpus_dir, "Corpus directory")->required();
  corpus_cmd->add_option("--jobs", jobs, "Problems to run concurrently")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (compute_cmd->parsed()) err << compute_cmd->help();
    else if (corpus_cmd->parsed()) err << corpus_cmd->help();
    else err << app.help();
    return kInvalidInput;
  }

  if (compute_cmd->parsed()) {
    compute.out_path = out_path;
    return run_compute(problem, compute, out, err);
  }
  return run_corpus(corpus_dir, jobs, out, err);
}

}  // namespace icis::cli
