#include "icis/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <queue>
#include <string>

namespace icis {

namespace {

void require_local(const MonomialOrder& order) {
  if (!order.is_local()) throw std::invalid_argument("standard basis routines need a local order");
}

// Integral polynomial kept sorted in decreasing order under the working order,
// so the leading term is the front and the highest-degree term the back.
struct ITerm {
  Monomial mon;
  Integer coef;
};

struct IPoly {
  std::vector<ITerm> terms;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mon; }
  const Integer& lc() const { return terms.front().coef; }
  std::uint64_t ecart() const { return terms.back().mon.degree() - terms.front().mon.degree(); }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const Budget& budget) : order_(order), budget_(budget) {}

  bool greater(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b) == std::strong_ordering::greater;
  }

  IPoly import(const Polynomial& p) const {
    Integer den = 1;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
    IPoly r;
    r.terms.reserve(p.size());
    for (const auto& t : p.terms())
      r.terms.push_back({t.monomial, t.coefficient.get_num() * (den / t.coefficient.get_den())});
    std::sort(r.terms.begin(), r.terms.end(),
              [this](const ITerm& a, const ITerm& b) { return greater(a.mon, b.mon); });
    normalize(r);
    return r;
  }

  static Polynomial export_to(const IPoly& p, const RingPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(p.terms.size());
    for (const auto& t : p.terms) terms.push_back({t.mon, Rational(t.coef)});
    return Polynomial::from_terms(ring, std::move(terms));
  }

  // Divide out the integer content and make the leading coefficient positive.
  static void normalize(IPoly& p) {
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& t : p.terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
      if (g == 1) break;
    }
    if (p.lc() < 0) g = -g;
    if (g != 1)
      for (auto& t : p.terms) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
  }

  // a*f - b*m*g, normalized.
  IPoly combine(const Integer& a, const IPoly& f, const Integer& b, const Monomial& m, const IPoly& g) const {
    IPoly r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    auto fi = f.terms.begin();
    auto gi = g.terms.begin();
    while (fi != f.terms.end() || gi != g.terms.end()) {
      if (gi == g.terms.end()) {
        r.terms.push_back({fi->mon, a * fi->coef});
        ++fi;
        continue;
      }
      Monomial gm = m * gi->mon;
      if (fi == f.terms.end() || greater(gm, fi->mon)) {
        r.terms.push_back({std::move(gm), -b * gi->coef});
        ++gi;
      } else if (gm == fi->mon) {
        Integer c = a * fi->coef - b * gi->coef;
        if (c != 0) r.terms.push_back({std::move(gm), std::move(c)});
        ++fi;
        ++gi;
      } else {
        r.terms.push_back({fi->mon, a * fi->coef});
        ++fi;
      }
    }
    truncate(r);
    normalize(r);
    return r;
  }

  // Once every monomial of degree d lies in the leading ideal, m^d is inside
  // the ideal of the local ring and terms of higher degree can be dropped.
  bool set_degree_bound(std::uint64_t d) {
    if (bound_ != 0 && bound_ <= d) return false;
    bound_ = d;
    return true;
  }

  void truncate(IPoly& p) const {
    if (bound_ == 0 || p.empty() || p.lm().degree() > bound_) return;
    std::erase_if(p.terms, [this](const ITerm& t) { return t.mon.degree() > bound_; });
  }

  // Cancel the leading term of h with g; requires lm(g) | lm(h).
  IPoly reduce(const IPoly& h, const IPoly& g) {
    if (++steps_ > budget_.max_reduction_steps)
      throw ResourceLimitExceeded("reduction step budget of " + std::to_string(budget_.max_reduction_steps) +
                                  " exceeded");
    Integer d = gcd(h.lc(), g.lc());
    return combine(g.lc() / d, h, h.lc() / d, g.lm().quotient_of(h.lm()), g);
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    const Monomial l = f.lm().lcm(g.lm());
    Integer d = gcd(f.lc(), g.lc());
    // g.lc/d * (l/lm f) * f - f.lc/d * (l/lm g) * g
    IPoly scaled_f;
    scaled_f.terms.reserve(f.terms.size());
    const Monomial mf = f.lm().quotient_of(l);
    for (const auto& t : f.terms) scaled_f.terms.push_back({mf * t.mon, t.coef});
    return combine(g.lc() / d, scaled_f, f.lc() / d, g.lm().quotient_of(l), g);
  }

  // Mora's weak normal form with the minimal-ecart rule. Intermediate results
  // whose ecart is smaller than the chosen reducer join the reducer set. In
  // lazy mode h is returned at that point instead, to become a basis element.
  IPoly normal_form(IPoly h, std::vector<const IPoly*> reducers, bool lazy = false) {
    std::deque<IPoly> kept;
    while (!h.empty()) {
      const IPoly* best = nullptr;
      std::uint64_t best_ecart = 0;
      for (const IPoly* t : reducers) {
        if (!t->lm().divides(h.lm())) continue;
        const auto e = t->ecart();
        if (best == nullptr || e < best_ecart) {
          best = t;
          best_ecart = e;
        }
      }
      if (best == nullptr) break;
      if (best_ecart > h.ecart()) {
        if (lazy) break;
        kept.push_back(h);
        reducers.push_back(&kept.back());
      }
      h = reduce(h, *best);
    }
    return h;
  }

 private:
  MonomialOrder order_;
  Budget budget_;
  std::uint64_t steps_ = 0;
  std::uint64_t bound_ = 0;
};

// Each element stands for its homogenization t^ecart * lm + ..., so a pair's
// degree is that of the lcm of the homogenized leading monomials.
struct Pair {
  Monomial lcm;
  std::uint64_t degree;
  std::size_t i;
  std::size_t j;
  std::uint64_t seq;
};

Pair make_pair(const IPoly& f, std::size_t i, const IPoly& g, std::size_t j, std::uint64_t seq) {
  Monomial l = f.lm().lcm(g.lm());
  const auto d = l.degree() + std::max(f.ecart(), g.ecart());
  return {std::move(l), d, i, j, seq};
}

// Normal strategy: lowest homogenized degree first, then the degrevlex-smallest lcm.
struct PairAfter {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    const auto c = MonomialOrder::global().compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return a.seq > b.seq;
  }
};

// Smallest d with every monomial of degree d divisible by some leading
// monomial, if the leading monomials include a pure power of each variable.
std::optional<std::uint64_t> corner_degree(const std::deque<IPoly>& basis, std::size_t nvars) {
  std::vector<std::uint64_t> power(nvars, 0);
  for (const auto& b : basis)
    if (auto j = b.lm().pure_power_variable())
      if (power[*j] == 0 || b.lm()[*j] < power[*j]) power[*j] = b.lm()[*j];
  std::uint64_t top = 1;
  for (auto a : power) {
    if (a == 0) return std::nullopt;
    top += a - 1;
  }
  auto covered = [&](std::uint64_t d) {
    std::vector<Monomial::Exponent> e(nvars, 0);
    e[nvars - 1] = static_cast<Monomial::Exponent>(d);
    for (;;) {
      const Monomial m(e);
      if (std::none_of(basis.begin(), basis.end(), [&](const IPoly& b) { return b.lm().divides(m); })) return false;
      // Next composition of d: move one unit from the last nonzero slot leftwards.
      std::size_t j = nvars - 1;
      while (j > 0 && e[j] == 0) --j;
      if (j == 0) return true;
      const auto rest = e[j] - 1;
      e[j] = 0;
      ++e[j - 1];
      e[nvars - 1] = rest;
    }
  };
  while (top > 1 && covered(top - 1)) --top;
  return top;
}

std::vector<const IPoly*> pointers(const std::deque<IPoly>& polys) {
  std::vector<const IPoly*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p);
  return out;
}

}  // namespace

IdealGens::IdealGens(RingPtr ring, std::vector<Polynomial> generators, MonomialOrder order)
    : ring_(std::move(ring)), generators_(std::move(generators)), order_(order) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].is_zero()) throw std::invalid_argument("generator " + std::to_string(i) + " is zero");
    if (!same_ring(generators_[i].ring(), ring_)) throw RingMismatch("generator from another ring");
  }
}

StandardBasis::StandardBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {
  leading_.reserve(elements_.size());
  for (const auto& e : elements_) leading_.push_back(e.leading_term(order_).monomial);
}

std::uint64_t ecart(const Polynomial& p, const MonomialOrder& order) {
  return p.degree() - p.leading_term(order).monomial.degree();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_local(order);
  if (f.is_zero() || g.is_zero()) throw std::domain_error("s-polynomial of the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch("s-polynomial operands from different rings");
  Engine engine(order, Budget{});
  return Engine::export_to(engine.spoly(engine.import(f), engine.import(g)), f.ring());
}

Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> reducers, const MonomialOrder& order,
                            const Budget& budget) {
  require_local(order);
  Engine engine(order, budget);
  std::deque<IPoly> imported;
  for (const auto& g : reducers) {
    if (!same_ring(g.ring(), p.ring())) throw RingMismatch("reducer from another ring");
    if (!g.is_zero()) imported.push_back(engine.import(g));
  }
  return Engine::export_to(engine.normal_form(engine.import(p), pointers(imported)), p.ring());
}

StandardBasis compute_standard_basis(const IdealGens& ideal, const Budget& budget) {
  require_local(ideal.order());
  Engine engine(ideal.order(), budget);
  std::deque<IPoly> basis;
  std::priority_queue<Pair, std::vector<Pair>, PairAfter> pairs;
  std::uint64_t seq = 0;
  bool unit_found = false;

  auto queue = [&](std::size_t i, std::size_t j) { pairs.push(make_pair(basis[i], i, basis[j], j, seq++)); };

  auto add = [&](IPoly p) {
    if (p.lm().is_one()) unit_found = true;
    basis.push_back(std::move(p));
    const auto j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i) queue(i, j);
    if (unit_found) return;
    const auto d = corner_degree(basis, ideal.ring()->nvars());
    if (!d || !engine.set_degree_bound(*d)) return;
    // Truncation can lower an element's ecart, which changes its pairs.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto before = basis[k].ecart();
      engine.truncate(basis[k]);
      if (basis[k].ecart() == before) continue;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (i != k) queue(std::min(i, k), std::max(i, k));
    }
  };

  for (const auto& g : ideal.generators()) {
    add(engine.import(g));
    if (unit_found) break;
  }

  std::uint64_t processed = 0;
  while (!unit_found && !pairs.empty()) {
    Pair pair = pairs.top();
    pairs.pop();
    if (++processed > budget.max_pairs)
      throw ResourceLimitExceeded("pair budget of " + std::to_string(budget.max_pairs) + " exceeded");
    const IPoly& f = basis[pair.i];
    const IPoly& g = basis[pair.j];
    if (f.lm().coprime(g.lm()) && std::min(f.ecart(), g.ecart()) == 0) continue;
    IPoly h = engine.normal_form(engine.spoly(f, g), pointers(basis), true);
    if (!h.empty()) add(std::move(h));
  }

  // Drop elements whose leading monomial is a multiple of another's. Among
  // equal leading monomials the smallest ecart, then the earliest, survives.
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lm().divides(basis[i].lm())) continue;
      const auto ei = basis[i].ecart();
      const auto ej = basis[j].ecart();
      redundant = basis[j].lm() != basis[i].lm() || ej < ei || (ej == ei && j < i);
    }
    if (!redundant) kept.push_back(Engine::export_to(basis[i], ideal.ring()));
  }
  return StandardBasis(ideal.ring(), ideal.order(), std::move(kept));
}

bool is_zero_dimensional(const StandardBasis& basis, std::size_t nvars) {
  if (nvars != basis.ring()->nvars()) throw std::invalid_argument("variable count does not match the basis ring");
  std::vector<bool> covered(nvars, false);
  for (const auto& m : basis.leading_monomials()) {
    if (m.is_one()) return true;
    if (auto j = m.pure_power_variable()) covered[*j] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Staircase colength(const StandardBasis& basis, const Budget& budget) {
  const auto n = basis.ring()->nvars();
  Staircase out;
  if (!is_zero_dimensional(basis, n)) return out;
  out.finite = true;
  const auto& lms = basis.leading_monomials();
  if (std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); })) return out;

  std::vector<Monomial::Exponent> bound(n, 0);
  for (const auto& m : lms) {
    if (auto j = m.pure_power_variable()) {
      if (bound[*j] == 0 || m[*j] < bound[*j]) bound[*j] = m[*j];
    }
  }
  std::uint64_t box = 1;
  for (auto b : bound) {
    if (box > budget.max_staircase_box / b)
      throw ResourceLimitExceeded("staircase box exceeds " + std::to_string(budget.max_staircase_box) +
                                  " monomials");
    box *= b;
  }

  std::vector<Monomial::Exponent> e(n, 0);
  for (;;) {
    Monomial m(e);
    if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); }))
      out.monomials_outside.push_back(std::move(m));
    std::size_t j = 0;
    while (j < n && ++e[j] == bound[j]) e[j++] = 0;
    if (j == n) break;
  }
  const auto order = MonomialOrder::local();
  std::sort(out.monomials_outside.begin(), out.monomials_outside.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) == std::strong_ordering::greater; });
  return out;
}

}  // namespace icis
