// Micro-benchmarks for the hot paths: the two structure-constant algorithms,
// transversal enumeration, the group-algebra referee, and specialized
// multiplication.

#include <benchmark/benchmark.h>

#include <vector>

#include "cycsol/algebra.hpp"
#include "cycsol/cosets.hpp"
#include "cycsol/oracle.hpp"
#include "cycsol/struct_consts.hpp"

using namespace cycsol;

namespace {

SignedComposition sc(std::vector<int> parts) {
  return SignedComposition(std::move(parts));
}

void BM_ConstantsViaCosets(benchmark::State& state) {
  const auto mu = sc({2, -1, 1}), nu = sc({-2, 1, -1});
  for (auto _ : state)
    benchmark::DoNotOptimize(structure_constants_via_cosets(mu, nu));
}
BENCHMARK(BM_ConstantsViaCosets);

void BM_ConstantsViaMatrices(benchmark::State& state) {
  const auto mu = sc({2, -1, 1}), nu = sc({-2, 1, -1});
  for (auto _ : state)
    benchmark::DoNotOptimize(structure_constants_via_matrices(mu, nu));
}
BENCHMARK(BM_ConstantsViaMatrices);

void BM_ConstantsDegree5(benchmark::State& state) {
  const auto mu = sc({3, -2}), nu = sc({-2, -2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(structure_constants_via_cosets(mu, nu));
    benchmark::DoNotOptimize(structure_constants_via_matrices(mu, nu));
  }
}
BENCHMARK(BM_ConstantsDegree5);

void BM_Transversal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> parts(static_cast<size_t>(n), -1);
  parts[0] = 1;
  const auto mu = sc(parts);
  for (auto _ : state)
    benchmark::DoNotOptimize(coset_transversal(mu, 2));
}
BENCHMARK(BM_Transversal)->Arg(4)->Arg(5);

void BM_OracleProduct(benchmark::State& state) {
  const auto mu = sc({1, -1, 1}), nu = sc({-2, 1});
  // Warm the cached basis once so the loop measures the product and solve.
  oracle_product(mu, nu, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_product(mu, nu, 2));
}
BENCHMARK(BM_OracleProduct);

void BM_SpecializedMultiply(benchmark::State& state) {
  const auto q = Coefficient::integer(2);
  const auto a = AlgebraElement::basis(4, sc({2, -1, 1})) +
                 AlgebraElement::basis(4, sc({-2, -2}));
  const auto b = AlgebraElement::basis(4, sc({1, -2, 1})) +
                 AlgebraElement::basis(4, sc({4}));
  for (auto _ : state)
    benchmark::DoNotOptimize(algebra_multiply(a, b, q));
}
BENCHMARK(BM_SpecializedMultiply);

}  // namespace

BENCHMARK_MAIN();
