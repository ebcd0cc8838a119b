#include <benchmark/benchmark.h>

#include "kzdyn/fusion.hpp"
#include "kzdyn/operators.hpp"

namespace {

using namespace kzdyn;

Vec sample_weight(const RootSystem& rs) {
  Vec lambda(rs.ambient_dim(), Rational(0));
  for (int i = 1; i <= rs.rank(); ++i)
    lambda = lambda + Rational(16 * i + 3, 7) * rs.fundamental_weight(i);
  return lambda;
}

void BM_det(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rational(static_cast<long long>(i * n + j + 1),
                            static_cast<long long>((i + 2 * j) % 7 + 1));
  for (auto _ : state) benchmark::DoNotOptimize(m.det());
}
BENCHMARK(BM_det)->Arg(8)->Arg(16)->Arg(32);

void BM_bb_w(benchmark::State& state) {
  const RootSystem rs('A', 2);
  const WeightModule V =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::vector_rep(3)});
  const Vec lambda = sample_weight(rs);
  const WeylElement w0 = rs.longest_element();
  for (auto _ : state) benchmark::DoNotOptimize(bb_w(V, w0, lambda));
}
BENCHMARK(BM_bb_w);

void BM_fusion_solve(benchmark::State& state) {
  const RootSystem rs('A', 2);
  const WeightModule V =
      WeightModule::tensor({WeightModule::vector_rep(3), WeightModule::wedge_rep(3, 2)});
  const Vec lambda = sample_weight(rs);
  for (auto _ : state) benchmark::DoNotOptimize(fusion_J(V, lambda));
}
BENCHMARK(BM_fusion_solve);

}  // namespace
