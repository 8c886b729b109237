#include "icis/minors.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace icis {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix needs at least one row and column");
  if (rows_ < cols_)
    throw std::invalid_argument("matrix must have at least as many rows as columns (" + std::to_string(rows_) +
                                "x" + std::to_string(cols_) + ")");
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  for (const auto& e : entries_)
    if (!same_ring(e.ring(), entries_.front().ring())) throw RingMismatch("matrix entries from different rings");
}

PolyMatrix assemble_section_matrix(const std::vector<std::vector<Polynomial>>& sections) {
  if (sections.empty()) throw std::invalid_argument("section matrix needs at least one column");
  const auto rows = sections.front().size();
  for (std::size_t c = 0; c < sections.size(); ++c)
    if (sections[c].size() != rows)
      throw std::invalid_argument("ragged sections: column " + std::to_string(c) + " has " +
                                  std::to_string(sections[c].size()) + " entries, expected " +
                                  std::to_string(rows));
  if (rows == 0) throw std::invalid_argument("sections have no components");
  std::vector<Polynomial> entries;
  entries.reserve(rows * sections.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& col : sections) entries.push_back(col[r]);
  return PolyMatrix(rows, sections.size(), std::move(entries));
}

PolyMatrix assemble_icis_matrix(const std::vector<Polynomial>& map, const std::vector<OneForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("ICIS matrix needs at least one form");
  const auto& ring = forms.front().ring();
  if (map.size() + forms.size() > ring->nvars())
    throw std::invalid_argument("ICIS matrix would have more columns (" + std::to_string(map.size() + forms.size()) +
                                ") than variables (" + std::to_string(ring->nvars()) + ")");
  std::vector<std::vector<Polynomial>> columns;
  columns.reserve(map.size() + forms.size());
  for (const auto& f : map) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch("map component from another ring");
    columns.push_back(differential(f).coefficients());
  }
  for (const auto& w : forms) {
    if (!same_ring(w.ring(), ring)) throw RingMismatch("form from another ring");
    columns.push_back(w.coefficients());
  }
  return assemble_section_matrix(columns);
}

namespace {

// Laplace expansion along the leftmost remaining column. A sub-minor is fixed
// by its row subset alone: with |S| rows it uses the last |S| columns.
class MinorExpander {
 public:
  explicit MinorExpander(const PolyMatrix& m) : m_(m) {}

  const Polynomial& det(std::uint64_t rows) {
    if (auto it = memo_.find(rows); it != memo_.end()) return it->second;
    const auto k = static_cast<std::size_t>(std::popcount(rows));
    const auto col = m_.cols() - k;
    Polynomial acc(m_.ring());
    if (k == 1) {
      acc = m_(static_cast<std::size_t>(std::countr_zero(rows)), col);
    } else {
      bool negative = false;
      for (std::uint64_t rest = rows; rest != 0; rest &= rest - 1) {
        const auto r = static_cast<std::size_t>(std::countr_zero(rest));
        const auto& entry = m_(r, col);
        if (!entry.is_zero()) {
          const auto& sub = det(rows & ~(std::uint64_t{1} << r));
          if (!sub.is_zero()) acc = negative ? acc - entry * sub : acc + entry * sub;
        }
        negative = !negative;
      }
    }
    return memo_.emplace(rows, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

}  // namespace

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  if (m.rows() > 64) throw std::invalid_argument("maximal_minors supports at most 64 rows");
  const auto q = m.cols();
  MinorExpander expander(m);
  std::vector<Polynomial> out;
  std::vector<std::size_t> pick(q);
  for (std::size_t i = 0; i < q; ++i) pick[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto r : pick) mask |= std::uint64_t{1} << r;
    const auto& d = expander.det(mask);
    if (!d.is_zero()) out.push_back(d);
    // Next combination in lexicographic order.
    std::size_t i = q;
    while (i > 0 && pick[i - 1] == m.rows() - q + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < q; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace icis
