#include "icis/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace icis {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return revlex_tiebreak(a, b) == std::strong_ordering::greater;
}

struct DegrevlexDescending {
  bool operator()(const Term& a, const Term& b) const {
    return degrevlex_greater(a.monomial, b.monomial);
  }
};

}  // namespace

RingPtr Ring::make(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!is_identifier(name))
      throw std::invalid_argument("variable name '" + name + "' is not an identifier");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable name '" + name + "'");
  }
  return RingPtr(new Ring(std::move(names)));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < names_.size(); ++j)
    if (names_[j] == name) return j;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t j, Exponent power) {
  std::vector<Exponent> e(nvars, 0);
  e.at(j) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > other.exps_[j]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] != 0 && other.exps_[j] != 0) return false;
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (found) return std::nullopt;
    found = j;
  }
  return found;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] += other.exps_[j];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] -= exps_[j];
  r.degree_ -= degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(exps_[j], other.exps_[j]);
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const Ring& ring) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(j);
    if (exps_[j] > 1) out += '^' + std::to_string(exps_[j]);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto e : exps_) h ^= std::hash<Exponent>{}(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// Orders

std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch in compare");
  if (a.degree() != b.degree()) {
    const bool higher = a.degree() > b.degree();
    if (kind_ == OrderKind::degrevlex)
      return higher ? std::strong_ordering::greater : std::strong_ordering::less;
    return higher ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return revlex_tiebreak(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const auto n = ring->nvars();
  return monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t j) {
  const auto n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, j), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->nvars()) throw std::invalid_argument("monomial length does not match ring");
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != ring->nvars())
      throw std::invalid_argument("monomial length does not match ring");
  std::sort(terms.begin(), terms.end(), DegrevlexDescending{});
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  return Polynomial(std::move(ring), std::move(merged));
}

std::uint64_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint64_t Polynomial::order() const {
  return terms_.empty() ? 0 : terms_.back().monomial.degree();
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, DegrevlexDescending{});
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (terms_.empty() || !terms_.back().monomial.is_one()) return 0;
  return terms_.back().coefficient;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  if (order.kind() == OrderKind::degrevlex) return terms_.front();
  // Lowest-degree block sits at the back; its first entry is the revlex-largest.
  auto it = terms_.end() - 1;
  const auto low = it->monomial.degree();
  while (it != terms_.begin() && (it - 1)->monomial.degree() == low) --it;
  return *it;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("operands belong to different rings");
}

Polynomial Polynomial::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->monomial == b->monomial) {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    } else if (degrevlex_greater(a->monomial, b->monomial)) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, other.terms_.end());
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : other.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), DegrevlexDescending{});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  auto terms = terms_;
  for (auto& t : terms) t.coefficient *= c;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  auto terms = terms_;
  for (auto& t : terms) {
    t.monomial = t.monomial * m;
    t.coefficient *= c;
  }
  // Multiplication by a monomial preserves any monomial order.
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::derivative(std::size_t j) const {
  if (j >= ring_->nvars()) throw std::out_of_range("derivative variable index");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial[j];
    if (e == 0) continue;
    std::vector<Monomial::Exponent> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[j] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coefficient * e});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::truncated(std::uint64_t max_degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.monomial.degree() <= max_degree) out.push_back(t);
  return Polynomial(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t j = 0; j < point.size(); ++j) {
      for (Monomial::Exponent e = 0; e < t.monomial[j]; ++e) v *= point[j];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den = 1;
  for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  Integer content = 0;
  for (const auto& t : terms_) {
    Integer num = t.coefficient.get_num() * (den / t.coefficient.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (terms_.front().coefficient < 0) content = -content;
  Rational scale(den, content);
  scale.canonicalize();
  return *this * scale;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.monomial.to_string(*ring_);
    } else {
      out += mag.get_str() + '*' + t.monomial.to_string(*ring_);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// One-forms

OneForm::OneForm(RingPtr ring, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != ring_->nvars())
    throw std::invalid_argument("one-form needs " + std::to_string(ring_->nvars()) +
                                " coefficients, got " + std::to_string(coefficients_.size()));
  for (const auto& c : coefficients_)
    if (!same_ring(c.ring(), ring_)) throw RingMismatch("one-form coefficient from another ring");
}

OneForm differential(const Polynomial& g) {
  std::vector<Polynomial> parts;
  parts.reserve(g.ring()->nvars());
  for (std::size_t j = 0; j < g.ring()->nvars(); ++j) parts.push_back(g.derivative(j));
  return OneForm(g.ring(), std::move(parts));
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("column " + std::to_string(position + 1) + ": " + what), position_(position) {}

}  // namespace icis
