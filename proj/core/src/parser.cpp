#include <cctype>
#include <limits>

#include "icis/polyring.hpp"

namespace icis {

namespace {

constexpr Monomial::Exponent kMaxExponent = 65535;

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }

  Polynomial expr() {
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    // Anything that could start a factor here is an implicit product.
    if (char c = peek(); std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
      throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
    return acc;
  }

  Polynomial factor() {
    bool monomial_base = false;
    Polynomial base = this->base(monomial_base);
    if (peek() != '^') return base;
    ++pos_;
    const auto e = exponent();
    if (monomial_base || base.size() <= 1) {
      if (base.is_zero()) return e == 0 ? Polynomial::constant(ring_, 1) : base;
      const auto& t = base.terms().front();
      std::vector<Monomial::Exponent> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
      for (auto& x : exps) {
        if (std::uint64_t(x) * e > kMaxExponent) throw ParseError(pos_, "exponent too large");
        x *= e;
      }
      Rational c = 1;
      mpz_pow_ui(c.get_num_mpz_t(), t.coefficient.get_num_mpz_t(), e);
      mpz_pow_ui(c.get_den_mpz_t(), t.coefficient.get_den_mpz_t(), e);
      return Polynomial::monomial(ring_, Monomial(std::move(exps)), c);
    }
    Polynomial result = Polynomial::constant(ring_, 1);
    Polynomial square = base;
    for (auto k = e; k > 0; k >>= 1) {
      if (k & 1) result = result * square;
      if (k > 1) square = square * square;
    }
    return result;
  }

  Polynomial base(bool& monomial_base) {
    const char c = peek();
    if (c == '(') {
      const auto open = pos_++;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError(at_end() ? open : pos_, "unbalanced parenthesis");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits("integer");
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const auto den_pos = pos_;
        den = digits("denominator");
        if (den == 0) throw ParseError(den_pos, "zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      monomial_base = true;
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto j = ring_->index_of(name);
      if (!j) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      monomial_base = true;
      return Polynomial::variable(ring_, *j);
    }
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Integer digits(const char* what) {
    skip_space();
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Monomial::Exponent exponent() {
    skip_space();
    const auto start = pos_;
    if (!at_end() && !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(start, "exponent must be a non-negative integer literal");
    Integer e = digits("exponent");
    if (!at_end() && (text_[pos_] == '.' || text_[pos_] == '/'))
      throw ParseError(pos_, "exponent must be a non-negative integer literal");
    if (e > kMaxExponent) throw ParseError(start, "exponent too large");
    return static_cast<Monomial::Exponent>(e.get_ui());
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!ring) throw std::invalid_argument("parse_polynomial needs a ring");
  return Parser(text, ring).parse();
}

}  // namespace icis
