#ifndef ICIS_STANDARD_BASIS_HPP
#define ICIS_STANDARD_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "icis/polyring.hpp"

namespace icis {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caps on a single computation. Hitting one raises ResourceLimitExceeded.
struct Budget {
  std::uint64_t max_pairs = 200'000;
  std::uint64_t max_reduction_steps = 5'000'000;
  // Largest monomial box scanned when enumerating a staircase.
  std::uint64_t max_staircase_box = 20'000'000;
};

// Generators of an ideal together with the order used to compute with it.
// Zero generators are rejected; an empty list stands for the zero ideal.
class IdealGens {
 public:
  IdealGens(RingPtr ring, std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder::local());

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
};

class StandardBasis {
 public:
  StandardBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t size() const { return elements_.size(); }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
};

struct Staircase {
  // Sorted from the largest monomial in the local order (1 first).
  std::vector<Monomial> monomials_outside;
  bool finite = false;

  std::optional<std::uint64_t> colength() const {
    if (!finite) return std::nullopt;
    return monomials_outside.size();
  }
};

// Total degree of p minus the degree of its leading monomial.
std::uint64_t ecart(const Polynomial& p, const MonomialOrder& order);

// lcm-cancelling combination of f and g, scaled to a primitive integral form.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Mora's weak normal form: returns r with u*p - r in <G> for a unit u, where r
// is zero or has a leading monomial divisible by no leading monomial of G.
// The result is primitive (integral, content 1), so it equals the textbook
// remainder up to a nonzero rational factor.
Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> reducers,
                            const MonomialOrder& order = MonomialOrder::local(), const Budget& budget = {});

StandardBasis compute_standard_basis(const IdealGens& ideal, const Budget& budget = {});

bool is_zero_dimensional(const StandardBasis& basis, std::size_t nvars);

Staircase colength(const StandardBasis& basis, const Budget& budget = {});

}  // namespace icis

#endif  // ICIS_STANDARD_BASIS_HPP
