#ifndef ICIS_TOOLS_PROBLEM_FILE_HPP
#define ICIS_TOOLS_PROBLEM_FILE_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "icis/index.hpp"

namespace icis::cli {

using Json = nlohmann::ordered_json;

// Every problem found while decoding, each prefixed with the JSON pointer
// (or text position) it refers to.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

ProblemSpec decode_problem(const Json& doc);
ProblemSpec parse_problem(const std::string& text);
ProblemSpec read_problem_file(const std::filesystem::path& path);

struct Timings {
  double standard_basis_ms = 0;
  double oracle_ms = 0;
};

Json encode_result(const IndexResult& result, const Ring& ring, const std::optional<Timings>& timings);

// Side file stored next to a corpus problem: `<stem>.expected.json`.
struct ExpectedResult {
  std::optional<std::uint64_t> index;  // nullopt: infinite
  std::vector<std::string> staircase;
};

ExpectedResult decode_expected(const Json& doc);
Json encode_expected(const IndexResult& result, const Ring& ring);

}  // namespace icis::cli

#endif  // ICIS_TOOLS_PROBLEM_FILE_HPP
