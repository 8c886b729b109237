#ifndef ICIS_MINORS_HPP
#define ICIS_MINORS_HPP

#include <cstddef>
#include <vector>

#include "icis/polyring.hpp"

namespace icis {

// Tall (rows >= cols) matrix of polynomials over one ring, stored row-major.
class PolyMatrix {
 public:
  // Throws std::invalid_argument when rows < cols, either dimension is zero,
  // the entry count is wrong, or entries come from different rings.
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return entries_.front().ring(); }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

// Columns are the given vectors, in order.
PolyMatrix assemble_section_matrix(const std::vector<std::vector<Polynomial>>& sections);

// Columns df_1..df_l followed by the coefficient vectors of `forms`.
PolyMatrix assemble_icis_matrix(const std::vector<Polynomial>& map, const std::vector<OneForm>& forms);

// Determinants of the cols x cols submatrices over every cols-subset of rows,
// in lexicographic row-subset order, skipping those that vanish identically.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

}  // namespace icis

#endif  // ICIS_MINORS_HPP
