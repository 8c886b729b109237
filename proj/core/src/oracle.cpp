#include "icis/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace icis::oracle {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<Monomial::Exponent>& prefix,
                         std::vector<Monomial>& out) {
  if (prefix.size() + 1 == nvars) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    prefix.push_back(e);
    monomials_of_degree(nvars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

// Row space of the truncated multiples of the generators inside the span of
// monomials of degree <= N. Columns are ordered by increasing degree.
class JetSpace {
 public:
  JetSpace(const RingPtr& ring, std::span<const Polynomial> gens, unsigned degree) : degree_(degree) {
    const auto n = ring->nvars();
    std::vector<Monomial::Exponent> prefix;
    for (unsigned d = 0; d <= degree; ++d) monomials_of_degree(n, d, prefix, columns_);
    index_.reserve(columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) index_.emplace(columns_[c], c);
    pivots_.resize(columns_.size());

    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const auto low = g.order();
      if (low > degree) continue;
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        const auto& m = columns_[c];
        if (m.degree() + low > degree) break;
        SparseRow row;
        for (const auto& t : g.terms()) {
          if (t.monomial.degree() + m.degree() > degree) continue;
          row.emplace_back(index_.at(t.monomial * m), t.coefficient);
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        insert(std::move(row));
      }
    }
  }

  std::uint64_t colength() const { return columns_.size() - rank_; }

  // True when x_j^N reduces to zero modulo the row space for every j.
  bool pure_powers_in_span(std::size_t nvars) const {
    for (std::size_t j = 0; j < nvars; ++j) {
      SparseRow row{{index_.at(Monomial::variable(nvars, j, degree_)), Rational(1)}};
      if (!reduce(row).empty()) return false;
    }
    return true;
  }

 private:
  SparseRow reduce(SparseRow row) const {
    while (!row.empty()) {
      const auto lead = row.front().first;
      const auto& pivot = pivots_[lead];
      if (pivot.empty()) break;
      row = axpy(row, row.front().second, pivot);
    }
    return row;
  }

  void insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    const Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    pivots_[row.front().first] = std::move(row);
    ++rank_;
  }

  // row - scale * pivot, dropping zeros.
  static SparseRow axpy(const SparseRow& row, const Rational& scale, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == row.end() || b->first < a->first) {
        out.emplace_back(b->first, -scale * b->second);
        ++b;
      } else {
        Rational v = a->second - scale * b->second;
        if (v != 0) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    return out;
  }

  unsigned degree_;
  std::vector<Monomial> columns_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<SparseRow> pivots_;
  std::size_t rank_ = 0;
};

}  // namespace

std::uint64_t truncated_colength(const RingPtr& ring, std::span<const Polynomial> gens, unsigned degree) {
  if (!ring) throw std::invalid_argument("truncated_colength needs a ring");
  return JetSpace(ring, gens, degree).colength();
}

TruncationReport stabilized_colength(const RingPtr& ring, std::span<const Polynomial> gens, unsigned max_degree) {
  if (!ring) throw std::invalid_argument("stabilized_colength needs a ring");
  unsigned start = 1;
  for (const auto& g : gens) start = std::max<unsigned>(start, static_cast<unsigned>(g.degree()));

  TruncationReport report;
  for (unsigned degree = start; degree <= max_degree; ++degree) {
    JetSpace space(ring, gens, degree);
    const auto estimate = space.colength();
    report.table.push_back({degree, estimate});
    const auto& t = report.table;
    const auto k = t.size();
    if (k >= 2 && t[k - 2].estimate == estimate && space.pure_powers_in_span(ring->nvars())) {
      report.verdict = Verdict::stabilized;
      report.value = estimate;
      return report;
    }
    if (k >= 4) {
      auto step = [&](std::size_t i) {
        return static_cast<std::int64_t>(t[i].estimate) - static_cast<std::int64_t>(t[i - 1].estimate);
      };
      const auto d1 = step(k - 3);
      const auto d2 = step(k - 2);
      const auto d3 = step(k - 1);
      if (d1 > 0 && d1 <= d2 && d2 <= d3) {
        report.verdict = Verdict::not_zero_dimensional;
        return report;
      }
    }
  }
  return report;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::stabilized:
      return "stabilized";
    case Verdict::not_zero_dimensional:
      return "not_zero_dimensional";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace icis::oracle
