#include <algorithm>

#include <gtest/gtest.h>

#include "icis/index.hpp"
#include "icis/minors.hpp"
#include "support/generators.hpp"

namespace icis {
namespace {

using testing::Gen;

class IndexTest : public ::testing::Test {
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

  ProblemSpec smooth(const RingPtr& ring, unsigned rank, std::vector<CollectionSpec> cols) {
    ProblemSpec s;
    s.mode = Mode::smooth;
    s.ring = ring;
    s.rank = rank;
    s.collections = std::move(cols);
    return s;
  }

  ProblemSpec icis(const RingPtr& ring, std::vector<Polynomial> map, std::vector<CollectionSpec> cols) {
    ProblemSpec s;
    s.mode = Mode::icis;
    s.ring = ring;
    s.map = std::move(map);
    s.collections = std::move(cols);
    return s;
  }

  ProblemSpec a1() { return icis(xyz, v({"x^2+y^2+z^2"}, xyz), {{2, {v({"0", "0", "1"}, xyz)}}}); }

  static std::vector<ViolationKind> kinds(const ProblemSpec& spec) {
    std::vector<ViolationKind> out;
    for (const auto& violation : validate(spec)) out.push_back(violation.kind);
    return out;
  }

  static bool has(const std::vector<ViolationKind>& ks, ViolationKind k) {
    return std::find(ks.begin(), ks.end(), k) != ks.end();
  }

  static std::optional<std::uint64_t> index_of(const ProblemSpec& spec) { return compute_index(spec).index; }
};

TEST_F(IndexTest, ValidateAcceptsWellFormedSpecs) {
  EXPECT_TRUE(validate(smooth(xy, 2, {{2, {v({"x", "y"}, xy)}}})).empty());
  EXPECT_TRUE(validate(a1()).empty());
}

TEST_F(IndexTest, ValidateRejectsWrongKSum) {
  auto spec = icis(xyz, v({"x^2+y^2+z^2"}, xyz), {{3, {v({"0", "0", "1"}, xyz)}}});
  auto ks = kinds(spec);
  EXPECT_TRUE(has(ks, ViolationKind::k_exceeds_bound));
  EXPECT_TRUE(has(ks, ViolationKind::k_sum));
  spec = smooth(xy, 2, {{1, {v({"x", "y"}, xy), v({"1", "0"}, xy)}}});
  EXPECT_EQ(kinds(spec), std::vector<ViolationKind>{ViolationKind::k_sum});
}

TEST_F(IndexTest, ValidateReportsEachConstraintDistinctly) {
  EXPECT_TRUE(has(kinds(ProblemSpec{}), ViolationKind::missing_ring));
  EXPECT_TRUE(has(kinds(smooth(xy, 2, {})), ViolationKind::no_collections));

  auto spec = smooth(xy, 2, {{2, {v({"x", "y"}, xy)}}});
  spec.rank.reset();
  EXPECT_TRUE(has(kinds(spec), ViolationKind::missing_rank));
  spec.rank = 2;
  spec.map = v({"x"}, xy);
  EXPECT_TRUE(has(kinds(spec), ViolationKind::map_in_smooth_mode));

  spec = a1();
  spec.rank = 3;
  EXPECT_TRUE(has(kinds(spec), ViolationKind::rank_in_icis_mode));

  spec = icis(xy, v({"x", "y"}, xy), {{1, {v({"1", "0"}, xy)}}});
  EXPECT_TRUE(has(kinds(spec), ViolationKind::map_too_long));

  spec = a1();
  spec.map[0] = Polynomial(xyz);
  EXPECT_TRUE(has(kinds(spec), ViolationKind::zero_map_component));

  spec = smooth(xy, 2, {{0, {v({"x", "y"}, xy)}}, {2, {v({"x", "y"}, xy)}}});
  EXPECT_TRUE(has(kinds(spec), ViolationKind::k_not_positive));

  spec = smooth(xy, 2, {{2, {v({"x", "y"}, xy), v({"1", "0"}, xy)}}});
  EXPECT_EQ(kinds(spec), std::vector<ViolationKind>{ViolationKind::member_count});

  spec = smooth(xy, 2, {{2, {v({"x", "y", "1"}, xy)}}});
  EXPECT_EQ(kinds(spec), std::vector<ViolationKind>{ViolationKind::member_length});

  spec = smooth(xy, 2, {{2, {{p("x", xy), p("u", Ring::make({"u"}))}}}});
  EXPECT_TRUE(has(kinds(spec), ViolationKind::ring_mismatch));
}

TEST_F(IndexTest, ViolationMessagesNameTheConstraint) {
  auto violations = validate(icis(xyz, v({"x^2+y^2+z^2"}, xyz), {{3, {v({"0", "0", "1"}, xyz)}}}));
  ASSERT_FALSE(violations.empty());
  bool named = false;
  for (const auto& violation : violations) named |= violation.message.find("sum of k_i") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST_F(IndexTest, BuildIdealSphereWithDz) {
  auto ideal = build_index_ideal(a1());
  EXPECT_EQ(ideal.generators(), v({"x^2+y^2+z^2", "2*x", "2*y"}, xyz));
  EXPECT_TRUE(ideal.order().is_local());
}

TEST_F(IndexTest, BuildIdealTwoCollections) {
  auto spec = smooth(xy, 2, {{1, {v({"x", "0"}, xy), v({"0", "1"}, xy)}}, {1, {v({"1", "0"}, xy), v({"0", "y"}, xy)}}});
  EXPECT_EQ(build_index_ideal(spec).generators(), v({"x", "y"}, xy));
}

TEST_F(IndexTest, BuildIdealOneByOne) {
  EXPECT_EQ(build_index_ideal(smooth(x1, 1, {{1, {v({"x^3"}, x1)}}})).generators(), v({"x^3"}, x1));
}

TEST_F(IndexTest, BuildIdealRejectsInvalidSpecs) {
  EXPECT_THROW(build_index_ideal(smooth(xy, 2, {})), ValidationError);
  EXPECT_THROW(compute_index(smooth(xy, 2, {})), ValidationError);
}

TEST_F(IndexTest, ComputeExamples) {
  EXPECT_EQ(index_of(smooth(xy, 2, {{2, {v({"x", "y"}, xy)}}})), 1u);
  EXPECT_EQ(index_of(smooth(x1, 1, {{1, {v({"x^5"}, x1)}}})), 5u);

  IndexOptions with_oracle;
  with_oracle.with_oracle = true;
  auto result = compute_index(a1(), with_oracle);
  EXPECT_EQ(result.index, 2u);
  ASSERT_TRUE(result.oracle);
  EXPECT_EQ(result.oracle->agreement, OracleAgreement::agree);
  ASSERT_EQ(result.staircase.size(), 2u);
  EXPECT_EQ(result.staircase[0].to_string(*xyz), "1");
  EXPECT_EQ(result.staircase[1].to_string(*xyz), "z");
  EXPECT_EQ(result.generator_count, 3u);
}

TEST_F(IndexTest, IdentitySectionsGiveIndexZero) {
  // n = 1, m = 2, k = 1: two sections whose values at 0 are independent.
  auto spec = smooth(x1, 2, {{1, {v({"1", "0"}, x1), v({"0", "1"}, x1)}}});
  EXPECT_EQ(index_of(spec), 0u);
}

TEST_F(IndexTest, NonIsolatedZeroIsInfinite) {
  IndexOptions with_oracle;
  with_oracle.with_oracle = true;
  auto result = compute_index(icis(xy, {}, {{2, {differential(p("x^2*y", xy)).coefficients()}}}), with_oracle);
  EXPECT_TRUE(result.infinite());
  EXPECT_EQ(result.oracle->report.verdict, oracle::Verdict::not_zero_dimensional);
  EXPECT_EQ(result.oracle->agreement, OracleAgreement::agree);
}

TEST_F(IndexTest, DegenerateMinorsGiveInfiniteIndex) {
  auto result = compute_index(smooth(xy, 2, {{2, {v({"0", "0"}, xy)}}}));
  EXPECT_EQ(result.generator_count, 0u);
  EXPECT_TRUE(result.infinite());
  result = compute_index(smooth(xy, 2, {{2, {v({"x", "x"}, xy)}}}));
  EXPECT_EQ(result.generator_count, 2u);
  EXPECT_TRUE(result.infinite());
  result = compute_index(smooth(xy, 2, {{1, {v({"x", "y"}, xy), v({"2*x", "2*y"}, xy)}}, {1, {v({"x", "y"}, xy), v({"1", "0"}, xy)}}}));
  EXPECT_TRUE(result.infinite());
}

TEST_F(IndexTest, TinyBudgetIsReported) {
  IndexOptions options;
  options.budget.max_reduction_steps = 1;
  auto spec = icis(xyz, v({"x^3 + y^3 + z^3"}, xyz), {{2, {v({"y", "z", "x"}, xyz)}}});
  EXPECT_THROW(compute_index(spec, options), ResourceLimitExceeded);
}

// --- properties -----------------------------------------------------------

TEST_F(IndexTest, PropertyEmptyMapMatchesSmoothMode) {
  Gen gen(51);
  for (int trial = 0; trial < 20; ++trial) {
    auto spec = testing::random_smooth_problem(gen, trial % 2 ? xy : xyz, trial % 3 == 0 ? 2 : 1);
    auto a = compute_index(spec);
    auto b = compute_index(testing::as_icis(spec));
    EXPECT_EQ(a.index, b.index);
    EXPECT_EQ(a.staircase, b.staircase);
    EXPECT_EQ(a.generator_count, b.generator_count);
  }
}

TEST_F(IndexTest, PropertyTrivializationInvariance) {
  Gen gen(52);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    auto spec = testing::random_smooth_problem(gen, ring, trial % 3 == 0 ? 2 : 1);
    auto moved = spec;
    auto p3 = gen.invertible_matrix(ring->nvars());
    for (auto& c : moved.collections)
      for (auto& member : c.members) member = testing::apply(p3, member);
    EXPECT_EQ(index_of(spec), index_of(moved));
  }
}

TEST_F(IndexTest, PropertyCollectionMixingAndPermutation) {
  Gen gen(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto spec = trial % 2 ? testing::random_smooth_problem(gen, xyz, 2) : testing::random_icis_problem(gen, xyz, 2);
    const auto base = index_of(spec);

    auto mixed = spec;
    auto& c = mixed.collections[0];
    auto mix = gen.invertible_matrix(c.members.size());
    std::vector<std::vector<Polynomial>> members;
    for (std::size_t j = 0; j < c.members.size(); ++j) {
      std::vector<Polynomial> acc(c.members[0].size(), Polynomial(xyz));
      for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += c.members[i][r] * mix[i][j];
      members.push_back(std::move(acc));
    }
    c.members = std::move(members);
    EXPECT_EQ(index_of(mixed), base);

    auto permuted = spec;
    std::swap(permuted.collections[0], permuted.collections[1]);
    EXPECT_EQ(index_of(permuted), base);

    auto scaled = spec;
    auto& member = scaled.collections[1].members.back();
    const auto s = gen.nonzero_rational(5, 3);
    for (auto& entry : member) entry = entry * s;
    EXPECT_EQ(index_of(scaled), base);
  }
}

TEST_F(IndexTest, PropertyIndexZeroIffSomeMinorIsAUnit) {
  Gen gen(54);
  int zeros = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto spec = testing::random_smooth_problem(gen, xy, 2);
    if (gen.coin(0.3)) spec.collections[0].members[0][0] += Polynomial::constant(xy, 1);
    bool unit_minor = false;
    for (const auto& c : spec.collections)
      for (const auto& m : maximal_minors(assemble_section_matrix(c.members))) unit_minor |= m.constant_term() != 0;
    auto index = index_of(spec);
    EXPECT_EQ(index == 0u, unit_minor);
    zeros += unit_minor;
  }
  EXPECT_GT(zeros, 0);
}

TEST_F(IndexTest, PropertyGenericLinearSectionsHaveIndexOne) {
  Gen gen(55);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& ring = trial % 2 ? xy : xyz;
    const auto n = ring->nvars();
    auto linear = gen.invertible_matrix(n);
    std::vector<Polynomial> section;
    for (std::size_t r = 0; r < n; ++r) {
      Polynomial entry(ring);
      for (std::size_t j = 0; j < n; ++j) entry += Polynomial::variable(ring, j) * linear[r][j];
      section.push_back(entry + gen.polynomial(ring, 2, 2, 3));
    }
    EXPECT_EQ(index_of(smooth(ring, static_cast<unsigned>(n), {{static_cast<unsigned>(n), {section}}})), 1u);
  }
}

TEST_F(IndexTest, PropertyRandomIcisAgreesWithOracle) {
  Gen gen(56);
  IndexOptions options;
  options.with_oracle = true;
  for (int trial = 0; trial < 15; ++trial) {
    auto spec = testing::random_icis_problem(gen, xyz, trial % 2 ? 2 : 1);
    auto result = compute_index(spec, options);
    EXPECT_NE(result.oracle->agreement, OracleAgreement::disagree);
  }
}

}  // namespace
}  // namespace icis
