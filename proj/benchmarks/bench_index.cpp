#include <string>

#include <benchmark/benchmark.h>

#include "icis/index.hpp"
#include "icis/minors.hpp"
#include "icis/oracle.hpp"
#include "icis/standard_basis.hpp"

namespace {

using namespace icis;

// Jacobian ideal of the A_k curve x^2 + y^(k+1).
std::vector<Polynomial> a_k_jacobian(const RingPtr& ring, int k) {
  const auto f = parse_polynomial("x^2 + y^" + std::to_string(k + 1) + " + x*y^2", ring);
  return differential(f).coefficients();
}

void BM_StandardBasisAk(benchmark::State& state) {
  auto ring = Ring::make({"x", "y"});
  const IdealGens ideal(ring, a_k_jacobian(ring, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(colength(compute_standard_basis(ideal)).colength());
}
BENCHMARK(BM_StandardBasisAk)->DenseRange(2, 12, 2);

void BM_OracleAk(benchmark::State& state) {
  auto ring = Ring::make({"x", "y"});
  const auto gens = a_k_jacobian(ring, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::stabilized_colength(ring, gens).value);
}
BENCHMARK(BM_OracleAk)->DenseRange(2, 8, 2);

void BM_MaximalMinors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j));
  auto ring = Ring::make(names);
  std::vector<Polynomial> entries;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c)
      entries.push_back(Polynomial::variable(ring, (r + c) % n) * Polynomial::variable(ring, (r * c + 1) % n) +
                        Polynomial::constant(ring, static_cast<long>(r + 2 * c)));
  const PolyMatrix m(n, n - 1, entries);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_minors(m).size());
}
BENCHMARK(BM_MaximalMinors)->DenseRange(3, 6);

void BM_Parse(benchmark::State& state) {
  auto ring = Ring::make({"x", "y", "z"});
  const std::string text = "(x + 2*y - 3/4*z)^6 - x^2*y^3*z + 17";
  for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial(text, ring).size());
}
BENCHMARK(BM_Parse);

void BM_ComputeIndexSphere(benchmark::State& state) {
  auto ring = Ring::make({"x", "y", "z"});
  ProblemSpec spec;
  spec.mode = Mode::icis;
  spec.ring = ring;
  spec.map = {parse_polynomial("x^2 + y^2 + z^2 + x*y*z", ring)};
  spec.collections = {{2, {differential(parse_polynomial("z + x^2", ring)).coefficients()}}};
  IndexOptions options;
  options.with_oracle = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(compute_index(spec, options).index);
}
BENCHMARK(BM_ComputeIndexSphere)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
