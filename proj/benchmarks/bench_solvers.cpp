#include <benchmark/benchmark.h>

#include "dqeig/dqeig.hpp"

using namespace dqeig;

namespace {

template <Method M>
void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DQMatrix q = gen_random_hermitian(n, 7);
  std::size_t iterations = 0;
  for (auto _ : state) {
    const SolveReport r = solve(q, M);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.eigenvalues.data());
  }
  state.counters["rotations"] = static_cast<double>(iterations);
}

void BM_Laplacian(benchmark::State& state) {
  const DQMatrix l = build_laplacian(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_three_step(l).eigenvalues.data());
}

void BM_Diag2(benchmark::State& state) {
  const DQMatrix q = gen_random_hermitian(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(diag2_dual(q));
}

void BM_Rotation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DQMatrix q = gen_random_hermitian(n, 5);
  const GivensPlan plan = plan_dual_at(q, 0, n - 1);
  DQMatrix acc = DQMatrix::identity(n);
  for (auto _ : state) {
    DQMatrix w = q;
    apply_dual_givens(w, plan, &acc);
    benchmark::DoNotOptimize(w.st(0, 0));
  }
}

void BM_Oracle(benchmark::State& state) {
  const DQMatrix q = gen_random_hermitian(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::dual_eigs_oracle(q).data());
}

}  // namespace

BENCHMARK(BM_Solve<Method::Max>)->Name("max")->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve<Method::Threshold>)->Name("threshold")->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve<Method::ThreeStep>)->Name("3sjacobi")->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Laplacian)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Diag2);
BENCHMARK(BM_Rotation)->Arg(10)->Arg(50);
BENCHMARK(BM_Oracle)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
