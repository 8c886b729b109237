#ifndef ICIS_POLYRING_HPP
#define ICIS_POLYRING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace icis {

using Rational = mpq_class;
using Integer = mpz_class;

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ambient polynomial ring Q[x_1..x_n]: only the ordered variable names.
class Ring {
 public:
  // Throws std::invalid_argument on an empty list, a duplicate name, or a
  // name that is not an identifier.
  static RingPtr make(std::vector<std::string> names);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t j) const { return names_.at(j); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring& other) const = default;

 private:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  // The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t j, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t j) const { return exps_[j]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Index of the single variable when this is x_j^a with a >= 1.
  std::optional<std::size_t> pure_power_variable() const;

  Monomial operator*(const Monomial& other) const;
  // other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  std::string to_string(const Ring& ring) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  std::size_t hash() const;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { degrevlex, negdegrevlex };

// Degree reverse lexicographic order (global) and its local counterpart,
// which ranks lower total degree higher and breaks ties the same way.
class MonomialOrder {
 public:
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static constexpr MonomialOrder global() { return MonomialOrder(OrderKind::degrevlex); }
  static constexpr MonomialOrder local() { return MonomialOrder(OrderKind::negdegrevlex); }

  OrderKind kind() const { return kind_; }
  bool is_local() const { return kind_ == OrderKind::negdegrevlex; }

  // Throws std::invalid_argument when the lengths differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_;
};

// Tie-break shared by both kinds; `a` and `b` must have the same length.
std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coefficient;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted in
// decreasing degrevlex order with no zero coefficients, so equality of
// polynomials is equality of term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t j);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  // Accepts unsorted terms with repeated monomials and zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Largest and smallest total degree of a term; both 0 for the zero polynomial.
  std::uint64_t degree() const;
  std::uint64_t order() const;

  Rational coefficient_of(const Monomial& m) const;
  Rational constant_term() const;

  // Throws std::domain_error on the zero polynomial.
  Term leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial multiply_term(const Monomial& m, const Rational& c) const;
  Polynomial derivative(std::size_t j) const;
  Polynomial truncated(std::uint64_t max_degree) const;
  Rational evaluate(std::span<const Rational> point) const;
  // Scalar multiple with integer coefficients of gcd 1 and a positive
  // leading (first stored) coefficient.
  Polynomial primitive() const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void require_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Sum_j a_j dx_j, one coefficient per ambient variable.
class OneForm {
 public:
  // Throws std::invalid_argument unless there is exactly one coefficient per
  // variable of a shared ring.
  OneForm(RingPtr ring, std::vector<Polynomial> coefficients);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }
  const Polynomial& operator[](std::size_t j) const { return coefficients_[j]; }
  std::size_t size() const { return coefficients_.size(); }

  bool operator==(const OneForm& other) const { return coefficients_ == other.coefficients_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> coefficients_;
};

OneForm differential(const Polynomial& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | identifier | '(' expr ')'
//   rational := int ('/' uint)?
// Whitespace is insignificant; implicit multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace icis

#endif  // ICIS_POLYRING_HPP
