#ifndef ICIS_INDEX_HPP
#define ICIS_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icis/oracle.hpp"
#include "icis/polyring.hpp"
#include "icis/standard_basis.hpp"

namespace icis {

enum class Mode { smooth, icis };

// One collection {w_1..w_r} attached to the Chern degree k. In smooth mode
// each member is a section with `rank` components; in ICIS mode it is the
// coefficient vector of a 1-form (one entry per variable).
struct CollectionSpec {
  unsigned k = 0;
  std::vector<std::vector<Polynomial>> members;
};

struct ProblemSpec {
  Mode mode = Mode::smooth;
  RingPtr ring;
  std::optional<unsigned> rank;   // smooth mode only
  std::vector<Polynomial> map;    // ICIS mode only: f_1..f_l
  std::vector<CollectionSpec> collections;
};

enum class ViolationKind {
  missing_ring,
  ring_mismatch,
  no_collections,
  missing_rank,
  rank_in_icis_mode,
  map_in_smooth_mode,
  map_too_long,
  zero_map_component,
  k_not_positive,
  k_exceeds_bound,
  member_count,
  member_length,
  k_sum,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

const char* to_string(ViolationKind kind);

std::vector<Violation> validate(const ProblemSpec& spec);

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Smooth mode: maximal minors of every section matrix. ICIS mode: f_1..f_l
// followed by the maximal minors of every (df | forms) matrix. Throws
// ValidationError when `spec` is invalid.
IdealGens build_index_ideal(const ProblemSpec& spec);

enum class OracleAgreement { agree, disagree, inconclusive };

const char* to_string(OracleAgreement a);

struct OracleCheck {
  OracleAgreement agreement = OracleAgreement::inconclusive;
  oracle::TruncationReport report;
};

struct IndexResult {
  std::optional<std::uint64_t> index;   // nullopt: infinite colength
  std::size_t generator_count = 0;
  std::size_t basis_size = 0;
  std::vector<Monomial> staircase;
  std::vector<Monomial> leading_monomials;
  std::optional<OracleCheck> oracle;
  double basis_seconds = 0;
  double oracle_seconds = 0;

  bool infinite() const { return !index.has_value(); }
};

struct IndexOptions {
  bool with_oracle = false;
  unsigned max_truncation = oracle::kDefaultMaxTruncation;
  Budget budget;
};

class OracleDisagreement : public std::runtime_error {
 public:
  explicit OracleDisagreement(IndexResult result);
  const IndexResult& result() const { return result_; }

 private:
  IndexResult result_;
};

IndexResult compute_index(const ProblemSpec& spec, const IndexOptions& options = {});

}  // namespace icis

#endif  // ICIS_INDEX_HPP
