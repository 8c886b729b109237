#include <algorithm>

#include <gtest/gtest.h>

#include "icis/oracle.hpp"
#include "icis/standard_basis.hpp"
#include "support/generators.hpp"

namespace icis {
namespace {

using testing::Gen;

class StandardBasisTest : public ::testing::Test {
 protected:
  RingPtr xyz = Ring::make({"x", "y", "z"});
  RingPtr xy = Ring::make({"x", "y"});
  RingPtr x1 = Ring::make({"x"});

  Polynomial p(const char* text, const RingPtr& ring) { return parse_polynomial(text, ring); }
  std::vector<Polynomial> v(std::initializer_list<const char*> texts, const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (auto t : texts) out.push_back(p(t, ring));
    return out;
  }

  static std::vector<std::string> names(const std::vector<Monomial>& ms, const Ring& ring) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.to_string(ring));
    return out;
  }

  // Minimal generators of the monomial ideal spanned by `ms`, sorted.
  static std::vector<std::string> minimal(std::vector<Monomial> ms, const Ring& ring) {
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < ms.size() && !redundant; ++j)
        redundant = j != i && ms[j].divides(ms[i]) && (!(ms[j] == ms[i]) || j < i);
      if (!redundant) keep.push_back(ms[i]);
    }
    auto out = names(keep, ring);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Polynomial> random_ideal(Gen& gen, const RingPtr& ring) {
    std::vector<Polynomial> gens;
    const auto n = ring->nvars();
    // One anchored pure power per variable keeps most instances zero-dimensional.
    for (std::size_t j = 0; j < n; ++j) {
      auto g = Polynomial::monomial(ring, Monomial::variable(n, j, static_cast<Monomial::Exponent>(gen.integer(1, 3))),
                                    gen.nonzero_rational());
      if (gen.coin(0.7)) g += gen.polynomial(ring, 2, 1, 4);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gen.coin()) gens.push_back(gen.nonzero_polynomial(ring, 3, 1, 4));
    return gens;
  }
};

TEST_F(StandardBasisTest, Ecart) {
  const auto local = MonomialOrder::local();
  EXPECT_EQ(ecart(p("x", x1), local), 0u);
  EXPECT_EQ(ecart(p("x + x^3", x1), local), 2u);
  EXPECT_EQ(ecart(p("1 + x + y^2", xy), local), 2u);
  EXPECT_THROW(ecart(Polynomial(x1), local), std::domain_error);
}

TEST_F(StandardBasisTest, NormalFormExamples) {
  EXPECT_TRUE(mora_normal_form(p("x", x1), v({"x"}, x1)).is_zero());
  EXPECT_EQ(mora_normal_form(p("y", xy), v({"x"}, xy)), p("y", xy));
  EXPECT_EQ(mora_normal_form(p("y", xy), {}), p("y", xy));
  EXPECT_TRUE(mora_normal_form(Polynomial(xy), v({"x"}, xy)).is_zero());
}

TEST_F(StandardBasisTest, NormalFormUsesLocalUnits) {
  const auto gens = v({"x - x^2"}, x1);
  EXPECT_TRUE(mora_normal_form(p("x", x1), gens).is_zero());
  // Truncated linear algebra shows x lies in <x - x^2> + m^{N+1} for every N:
  // adding x to the generators never changes the truncated colength.
  const auto with_x = v({"x - x^2", "x"}, x1);
  for (unsigned n = 2; n <= 10; ++n)
    EXPECT_EQ(oracle::truncated_colength(x1, gens, n), oracle::truncated_colength(x1, with_x, n)) << n;
}

TEST_F(StandardBasisTest, NormalFormRejectsGlobalOrder) {
  EXPECT_THROW(mora_normal_form(p("x", x1), v({"x"}, x1), MonomialOrder::global()), std::invalid_argument);
}

TEST_F(StandardBasisTest, BasisOfCoordinateIdeal) {
  auto basis = compute_standard_basis(IdealGens(xy, v({"x", "y"}, xy)));
  EXPECT_EQ(minimal(basis.leading_monomials(), *xy), (std::vector<std::string>{"x", "y"}));
}

TEST_F(StandardBasisTest, BasisAbsorbsLocalUnit) {
  auto basis = compute_standard_basis(IdealGens(x1, v({"x - x^2"}, x1)));
  EXPECT_EQ(minimal(basis.leading_monomials(), *x1), (std::vector<std::string>{"x"}));
  EXPECT_EQ(colength(basis).colength(), 1u);
  auto report = oracle::stabilized_colength(x1, v({"x - x^2"}, x1));
  ASSERT_TRUE(report.stabilized());
  EXPECT_EQ(*report.value, 1u);
}

TEST_F(StandardBasisTest, BasisOfSphereWithDz) {
  auto basis = compute_standard_basis(IdealGens(xyz, v({"x^2+y^2+z^2", "2*x", "2*y"}, xyz)));
  EXPECT_EQ(minimal(basis.leading_monomials(), *xyz), (std::vector<std::string>{"x", "y", "z^2"}));
  auto stairs = colength(basis);
  EXPECT_EQ(names(stairs.monomials_outside, *xyz), (std::vector<std::string>{"1", "z"}));
  EXPECT_EQ(*oracle::stabilized_colength(xyz, v({"x^2+y^2+z^2", "2*x", "2*y"}, xyz)).value, 2u);
}

TEST_F(StandardBasisTest, LeadingMonomialsMatchElements) {
  auto basis = compute_standard_basis(IdealGens(xy, v({"x^2 + y^3", "x*y"}, xy)));
  ASSERT_EQ(basis.elements().size(), basis.leading_monomials().size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    EXPECT_EQ(basis.leading_monomials()[i], basis.elements()[i].leading_term(MonomialOrder::local()).monomial);
}

TEST_F(StandardBasisTest, ZeroDimensionality) {
  auto leading = [&](std::initializer_list<const char*> gens, const RingPtr& ring) {
    return StandardBasis(ring, MonomialOrder::local(), v(gens, ring));
  };
  EXPECT_TRUE(is_zero_dimensional(leading({"x", "y"}, xy), 2));
  EXPECT_FALSE(is_zero_dimensional(leading({"x*y"}, xy), 2));
  EXPECT_TRUE(is_zero_dimensional(leading({"x", "y", "z^2"}, xyz), 3));
}

TEST_F(StandardBasisTest, StaircaseEnumeration) {
  auto stairs = [&](std::initializer_list<const char*> gens, const RingPtr& ring) {
    return colength(StandardBasis(ring, MonomialOrder::local(), v(gens, ring)));
  };
  auto s = stairs({"x", "y"}, xy);
  EXPECT_EQ(names(s.monomials_outside, *xy), (std::vector<std::string>{"1"}));
  s = stairs({"x^2", "x*y", "y^3"}, xy);
  ASSERT_TRUE(s.finite);
  EXPECT_EQ(names(s.monomials_outside, *xy), (std::vector<std::string>{"1", "x", "y", "y^2"}));
  EXPECT_EQ(s.colength(), 4u);
  s = stairs({"x*y"}, xy);
  EXPECT_FALSE(s.finite);
  EXPECT_FALSE(s.colength());
  s = stairs({"1 + x"}, xy);
  EXPECT_TRUE(s.finite);
  EXPECT_EQ(s.colength(), 0u);
}

TEST_F(StandardBasisTest, ZeroIdealIsInfinite) {
  auto basis = compute_standard_basis(IdealGens(xy, {}));
  EXPECT_EQ(basis.size(), 0u);
  EXPECT_FALSE(colength(basis).finite);
}

TEST_F(StandardBasisTest, IdealGensRejectsZeroGenerators) {
  EXPECT_THROW(IdealGens(xy, {Polynomial(xy)}), std::invalid_argument);
  auto other = Ring::make({"u"});
  EXPECT_THROW(IdealGens(xy, {p("u", other)}), RingMismatch);
}

TEST_F(StandardBasisTest, GlobalOrderIsRejectedForBases) {
  EXPECT_THROW(compute_standard_basis(IdealGens(xy, v({"x"}, xy), MonomialOrder::global())), std::invalid_argument);
}

TEST_F(StandardBasisTest, BudgetExhaustionIsReported) {
  Budget tiny;
  tiny.max_reduction_steps = 1;
  EXPECT_THROW(compute_standard_basis(IdealGens(xy, v({"x^3 + y^4", "x*y + y^5", "x^2*y"}, xy)), tiny),
               ResourceLimitExceeded);
  Budget box;
  box.max_staircase_box = 10;
  auto basis = compute_standard_basis(IdealGens(xy, v({"x^20", "y^20"}, xy)));
  EXPECT_THROW(colength(basis, box), ResourceLimitExceeded);
}

TEST_F(StandardBasisTest, MilnorNumbers) {
  struct Case {
    std::vector<const char*> gens;
    std::uint64_t mu;
  };
  // Jacobian ideals of A_k, D_4, E_6: mu = k, 4, 6.
  const std::vector<Case> cases = {
      {{"2*x", "3*y^2"}, 2},
      {{"2*x", "5*y^4"}, 4},
      {{"2*x*y", "x^2 + 3*y^2"}, 4},      // D_4: x^2*y + y^3
      {{"3*x^2", "4*y^3"}, 6},            // E_6: x^3 + y^4
  };
  for (const auto& c : cases) {
    std::vector<Polynomial> gens;
    for (auto t : c.gens) gens.push_back(p(t, xy));
    auto stairs = colength(compute_standard_basis(IdealGens(xy, gens)));
    EXPECT_EQ(stairs.colength(), c.mu);
    auto report = oracle::stabilized_colength(xy, gens);
    ASSERT_TRUE(report.stabilized());
    EXPECT_EQ(*report.value, c.mu);
  }
}

// --- properties -----------------------------------------------------------

TEST_F(StandardBasisTest, PropertySPolynomialsReduceToZero) {
  Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    auto basis = compute_standard_basis(IdealGens(ring, random_ideal(gen, ring)));
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i + 1; j < el.size(); ++j)
        EXPECT_TRUE(mora_normal_form(s_polynomial(el[i], el[j], MonomialOrder::local()), el).is_zero());
  }
}

TEST_F(StandardBasisTest, PropertyMembershipBothWays) {
  Gen gen(32);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    auto gens = random_ideal(gen, ring);
    auto basis = compute_standard_basis(IdealGens(ring, gens));
    for (const auto& g : gens) EXPECT_TRUE(mora_normal_form(g, basis.elements()).is_zero());
    // Soundness at truncation: adding the basis to the generators never
    // changes the truncated colength.
    auto stairs = colength(basis);
    if (!stairs.finite) continue;
    std::vector<Polynomial> both = gens;
    both.insert(both.end(), basis.elements().begin(), basis.elements().end());
    unsigned top = 0;
    for (const auto& g : both) top = std::max(top, static_cast<unsigned>(g.degree()));
    EXPECT_EQ(oracle::truncated_colength(ring, gens, top + 1), oracle::truncated_colength(ring, both, top + 1));
  }
}

TEST_F(StandardBasisTest, PropertyGeneratorOrderIndependence) {
  Gen gen(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    auto gens = random_ideal(gen, ring);
    auto a = compute_standard_basis(IdealGens(ring, gens));
    std::shuffle(gens.begin(), gens.end(), gen.engine());
    auto b = compute_standard_basis(IdealGens(ring, gens));
    EXPECT_EQ(minimal(a.leading_monomials(), *ring), minimal(b.leading_monomials(), *ring));
    EXPECT_EQ(colength(a).colength(), colength(b).colength());
  }
}

TEST_F(StandardBasisTest, PropertyUnitInvariance) {
  Gen gen(34);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    auto gens = random_ideal(gen, ring);
    auto before = colength(compute_standard_basis(IdealGens(ring, gens))).colength();
    const auto i = static_cast<std::size_t>(gen.integer(0, static_cast<int>(gens.size()) - 1));
    auto unit = Polynomial::constant(ring, gen.nonzero_rational(3, 2)) + gen.polynomial(ring, 2, 1, 2);
    gens[i] = gens[i] * unit;
    EXPECT_EQ(colength(compute_standard_basis(IdealGens(ring, gens))).colength(), before);
  }
}

TEST_F(StandardBasisTest, PropertyColengthZeroIffUnitGenerator) {
  Gen gen(35);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    const int count = gen.integer(1, 3);
    bool has_unit = false;
    for (int i = 0; i < count; ++i) {
      auto g = gen.nonzero_polynomial(xy, 3, gen.coin(0.3) ? 0 : 1, 3);
      has_unit |= g.constant_term() != 0;
      gens.push_back(g);
    }
    auto stairs = colength(compute_standard_basis(IdealGens(xy, gens)));
    EXPECT_EQ(stairs.finite && stairs.colength() == 0u, has_unit);
  }
}

TEST_F(StandardBasisTest, PropertyColengthAgreesWithOracle) {
  Gen gen(36);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    auto gens = random_ideal(gen, ring);
    auto stairs = colength(compute_standard_basis(IdealGens(ring, gens)));
    auto report = oracle::stabilized_colength(ring, gens, 14);
    if (stairs.finite) {
      if (report.verdict == oracle::Verdict::inconclusive) continue;
      ASSERT_TRUE(report.stabilized());
      EXPECT_EQ(stairs.colength(), report.value);
      ++compared;
    } else {
      EXPECT_NE(report.verdict, oracle::Verdict::stabilized);
    }
  }
  EXPECT_GE(compared, 30);
}

}  // namespace
}  // namespace icis
