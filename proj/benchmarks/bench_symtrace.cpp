#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "symtrace/exactlin.hpp"
#include "symtrace/fiber.hpp"
#include "symtrace/traceid.hpp"

using namespace symtrace;

// args: dimension, degree
static void BM_WordMatrix(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto N = static_cast<std::size_t>(state.range(1));
  Rng rng(1);
  const auto word = gen::word(rng, {true, false, true, false}, d, 2, true);
  for (auto _ : state) benchmark::DoNotOptimize(word_matrix(word, N, d));
}
BENCHMARK(BM_WordMatrix)->Args({2, 4})->Args({2, 8})->Args({3, 4})->Args({3, 6});

// args: m, worker threads
static void BM_TraceIdentityR1(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<bool> pattern;
  for (std::size_t i = 0; i < m; ++i) {
    pattern.push_back(true);
    pattern.push_back(false);
  }
  Rng rng(2);
  const auto word = gen::word(rng, pattern, 3, 1, false);
  TraceOptions options;
  options.parallel = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trace_identity(word, 5, 3, options));
}
BENCHMARK(BM_TraceIdentityR1)->Args({2, 1})->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_TraceIdentityR2(benchmark::State& state) {
  Rng rng(3);
  const auto word = gen::word(rng, {true, false, false, true}, 2, 2, true);
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trace_identity(word, N, 2));
}
BENCHMARK(BM_TraceIdentityR2)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

// args: m, r
static void BM_GraphValue(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<std::size_t>(state.range(1));
  Rng rng(4);
  Decoration dec{{}, {}, gen::functional(rng, 2, 2, false)};
  for (std::size_t i = 0; i < m; ++i) {
    dec.v_tensors.push_back(rng.sym_tensor(2, r));
    dec.w_tensors.push_back(rng.sym_tensor(2, r));
  }
  const auto graphs = enumerate_graphs(m, r);
  for (auto _ : state) {
    for (const auto& g : graphs) benchmark::DoNotOptimize(graph_value(g, dec));
  }
}
BENCHMARK(BM_GraphValue)->Args({2, 1})->Args({3, 1})->Args({2, 2})->Args({3, 2});

// args: d, r
static void BM_OnlyZeroTest(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<std::size_t>(state.range(1));
  std::vector<SymTensor> forms;
  for (std::size_t i = 0; i < d; ++i) {
    MultiIndex alpha(d, 0);
    alpha[i] = static_cast<unsigned>(r);
    forms.push_back(SymTensor::monomial(alpha));
  }
  for (auto _ : state) benchmark::DoNotOptimize(only_zero_test(forms, r, d));
}
BENCHMARK(BM_OnlyZeroTest)->Args({2, 2})->Args({3, 2})->Args({3, 3});

// args: r, rank-deficient functional
static void BM_CertificateSearch(benchmark::State& state) {
  Rng rng(5);
  const auto inst = gen::fiber_instance(rng, 2, 2, static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(product_witness(inst));
}
BENCHMARK(BM_CertificateSearch)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Args({2, 1});

static void BM_RankKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(6);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
  for (auto _ : state) benchmark::DoNotOptimize(rank_kernel(m));
}
BENCHMARK(BM_RankKernel)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
