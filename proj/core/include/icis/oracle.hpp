#ifndef ICIS_ORACLE_HPP
#define ICIS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icis/polyring.hpp"

namespace icis::oracle {

// Local colength by plain linear algebra on jets, independent of any
// standard-basis machinery. Intentionally naive.

inline constexpr unsigned kDefaultMaxTruncation = 24;

enum class Verdict { stabilized, not_zero_dimensional, inconclusive };

struct TruncationEntry {
  unsigned degree;
  std::uint64_t estimate;

  bool operator==(const TruncationEntry&) const = default;
};

struct TruncationReport {
  std::vector<TruncationEntry> table;
  Verdict verdict = Verdict::inconclusive;
  std::optional<std::uint64_t> value;

  bool stabilized() const { return verdict == Verdict::stabilized; }
};

// dim Q[x]/(I + m^{N+1}): the number of monomials of degree <= N minus the
// rank of the truncated multiples m*g. Exact rational row reduction.
std::uint64_t truncated_colength(const RingPtr& ring, std::span<const Polynomial> gens, unsigned degree);

// Raises the truncation degree from the largest generator degree until two
// consecutive estimates agree and every x_j^N lies in the truncated span.
// Reports not_zero_dimensional (heuristically) once the estimate has grown at
// a non-decreasing positive rate over three consecutive degrees, and
// inconclusive when `max_degree` is reached first.
TruncationReport stabilized_colength(const RingPtr& ring, std::span<const Polynomial> gens,
                                     unsigned max_degree = kDefaultMaxTruncation);

const char* to_string(Verdict v);

}  // namespace icis::oracle

#endif  // ICIS_ORACLE_HPP
