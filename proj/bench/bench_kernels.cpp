// JI-based parallel kernels against the serial all-element references.
// The second argument of the kernel benchmarks is the OpenMP thread count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qtriad/examples.hpp"
#include "qtriad/reference.hpp"

using namespace qtriad;

namespace {

TriadPtr duality(std::size_t n) { return duality_triad(chain(n)); }

void threads(benchmark::State& st) { omp_set_num_threads(int(st.range(1))); }

void BM_SolutionLaws_Kernel(benchmark::State& st) {
  threads(st);
  auto t = duality(std::size_t(st.range(0)));
  auto q0 = build_q0(t);
  for (auto _ : st) benchmark::DoNotOptimize(validate_solution(*t, q0.solution));
}

void BM_SolutionLaws_Reference(benchmark::State& st) {
  auto t = duality(std::size_t(st.range(0)));
  auto q0 = build_q0(t);
  for (auto _ : st) benchmark::DoNotOptimize(reference::failing_solution_laws(*t, q0.solution));
}

void BM_Associativity_Kernel(benchmark::State& st) {
  threads(st);
  auto q = endo_quantale(chain(std::size_t(st.range(0)))).quantale;
  for (auto _ : st)
    benchmark::DoNotOptimize(validate_quantale(q->carrier, q->mult, q->unit, q->involution).ok());
}

void BM_Associativity_Reference(benchmark::State& st) {
  auto q = endo_quantale(chain(std::size_t(st.range(0)))).quantale;
  for (auto _ : st) benchmark::DoNotOptimize(reference::is_associative(*q));
}

void BM_Enumerate_Kernel(benchmark::State& st) {
  threads(st);
  auto s = chain(std::size_t(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_sup_morphisms(s, s));
}

void BM_Enumerate_Reference(benchmark::State& st) {
  auto s = chain(std::size_t(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::sup_morphisms(*s, *s));
}

void BM_Tensor_Kernel(benchmark::State& st) {
  threads(st);
  auto t = zero_triad(chain(std::size_t(st.range(0))), chain(std::size_t(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(tensor_over_T(*t));
}

void BM_Tensor_Reference(benchmark::State& st) {
  auto t = zero_triad(chain(std::size_t(st.range(0))), chain(std::size_t(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(reference::tensor_closed_sets(*t));
}

void kernel_args(benchmark::internal::Benchmark* b, std::initializer_list<int> sizes) {
  const int max_threads = omp_get_max_threads();
  for (int n : sizes) {
    b->Args({n, 1});
    if (max_threads > 1) b->Args({n, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_SolutionLaws_Kernel)->Apply([](auto* b) { kernel_args(b, {3, 4, 5}); });
BENCHMARK(BM_SolutionLaws_Reference)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_Associativity_Kernel)->Apply([](auto* b) { kernel_args(b, {3, 4, 5}); });
BENCHMARK(BM_Associativity_Reference)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_Enumerate_Kernel)->Apply([](auto* b) { kernel_args(b, {3, 4, 5}); });
BENCHMARK(BM_Enumerate_Reference)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_Tensor_Kernel)->Apply([](auto* b) { kernel_args(b, {2, 3, 4}); });
BENCHMARK(BM_Tensor_Reference)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
