#include <benchmark/benchmark.h>

#include "knotconc/blanchfield.hpp"
#include "knotconc/certify.hpp"
#include "knotconc/factor.hpp"
#include "knotconc/seifert.hpp"
#include "knotconc/twist.hpp"

using namespace knotconc;

static void BM_FactorInflatedTwist(benchmark::State& state) {
  LaurentPoly p = twist_alexander(34).inflate(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorInflatedTwist)->DenseRange(1, 5);

static void BM_FactorReducibleSquare(benchmark::State& state) {
  LaurentPoly p = twist_alexander(state.range(0) * state.range(0)).inflate(2);
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorReducibleSquare)->DenseRange(2, 5);

static void BM_SignatureProfile(benchmark::State& state) {
  SeifertMatrix V = twist_seifert_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signature_profile(V));
}
BENCHMARK(BM_SignatureProfile)->Arg(34)->Arg(874)->Arg(34954);

static void BM_RhoZeroTrefoil(benchmark::State& state) {
  SeifertMatrix tre({{Integer(-1), Integer(1)}, {Integer(0), Integer(-1)}});
  for (auto _ : state) benchmark::DoNotOptimize(rho_zero(tre));
}
BENCHMARK(BM_RhoZeroTrefoil);

static void BM_FindIsotropic(benchmark::State& state) {
  PairedModule m = pairing_from_seifert(twist_seifert_matrix(4), 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_isotropic(m));
}
BENCHMARK(BM_FindIsotropic);

static void BM_CertifyDavis(benchmark::State& state) {
  RhoOneTable table = RhoOneTable::builtin();
  std::vector<KnotHypotheses> family{twist_hypotheses(34, table),
                                     twist_hypotheses(310, table),
                                     twist_hypotheses(874, table)};
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_independence(family, state.range(0)));
}
BENCHMARK(BM_CertifyDavis)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
