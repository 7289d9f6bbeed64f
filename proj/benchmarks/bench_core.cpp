#include <benchmark/benchmark.h>

#include "snl/inequalities.hpp"
#include "snl/random.hpp"
#include "snl/snumbers.hpp"
#include "snl/spectral.hpp"

using namespace snl;

namespace {

void BM_JacobiEigen(benchmark::State& state) {
  const auto alg = TracialAlgebra::factor(static_cast<int>(state.range(0)));
  const auto h = gen_operator(1, 0, 0, alg, OperatorKind::hermitian);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(h.block(0)));
}
BENCHMARK(BM_JacobiEigen)->DenseRange(2, 16, 2);

void BM_Mu(benchmark::State& state) {
  const auto alg = TracialAlgebra::factor(static_cast<int>(state.range(0)));
  const auto z = gen_operator(1, 0, 0, alg, OperatorKind::general);
  for (auto _ : state) benchmark::DoNotOptimize(mu(z));
}
BENCHMARK(BM_Mu)->DenseRange(2, 16, 2);

void BM_Polar(benchmark::State& state) {
  const auto alg = TracialAlgebra::factor(static_cast<int>(state.range(0)));
  const auto z = gen_operator(1, 0, 0, alg, OperatorKind::general);
  for (auto _ : state) benchmark::DoNotOptimize(polar(z));
}
BENCHMARK(BM_Polar)->Arg(2)->Arg(6)->Arg(16);

void BM_YoungSv(benchmark::State& state) {
  const auto alg = TracialAlgebra::factor(static_cast<int>(state.range(0)));
  const auto x = gen_operator(1, 0, 0, alg, OperatorKind::general);
  const auto y = gen_operator(1, 0, 1, alg, OperatorKind::general);
  const auto pq = ConjugatePair::from_p(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(check_young_sv(x, y, pq));
}
BENCHMARK(BM_YoungSv)->DenseRange(2, 6, 1);

void BM_YoungTraceAll(benchmark::State& state) {
  const auto alg = TracialAlgebra::factor(static_cast<int>(state.range(0)));
  const auto x = gen_operator(1, 0, 0, alg, OperatorKind::general);
  const auto y = gen_operator(1, 0, 1, alg, OperatorKind::general);
  const auto pq = ConjugatePair::from_p(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(check_young_trace_all(x, y, pq));
}
BENCHMARK(BM_YoungTraceAll)->Arg(2)->Arg(6);

// block structure matters: eight small blocks vs one large factor of the same size
void BM_MuBlocks(benchmark::State& state) {
  const TracialAlgebra alg(std::vector<Block>(8, Block{2, 0.5}));
  const auto z = gen_operator(1, 0, 0, alg, OperatorKind::general);
  for (auto _ : state) benchmark::DoNotOptimize(mu(z));
}
BENCHMARK(BM_MuBlocks);

}  // namespace

BENCHMARK_MAIN();
