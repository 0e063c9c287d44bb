// SPDX-License-Identifier: MIT
#include <benchmark/benchmark.h>

#include "gfc/elliptic.hpp"
#include "gfc/group.hpp"
#include "gfc/moduli.hpp"
#include "gfc/quadrics.hpp"
#include "gfc/serialize.hpp"

namespace {

void BM_CycloMul(benchmark::State& state) {
  gfc::CycloElem a = gfc::apply_a(gfc::CycloElem::zeta(3));
  gfc::CycloElem b = gfc::apply_a(gfc::CycloElem::zeta(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CycloMul);

void BM_CycloInverse(benchmark::State& state) {
  gfc::CycloElem a = gfc::apply_a(gfc::CycloElem::zeta(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_CycloInverse);

void BM_SubgroupEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    // all_subgroups() memoizes, so redo the closure by hand via generate().
    std::vector<gfc::Subgroup> out;
    for (unsigned g = 1; g < 64; ++g)
      out.push_back(gfc::generate({gfc::GroupElem::from_mask(g)}));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SubgroupEnumeration);

void BM_JInvariantsAtMuZero(benchmark::State& state) {
  const gfc::ModuliPoint& mu = gfc::mu_zero();
  for (auto _ : state) {
    for (const auto& t : gfc::t_curves(mu))
      benchmark::DoNotOptimize(gfc::j_invariant(t.model));
  }
}
BENCHMARK(BM_JInvariantsAtMuZero);

void BM_VerifyLinearAut(benchmark::State& state) {
  const gfc::ModuliPoint& mu = gfc::mu_zero();
  gfc::LinearAutWitness w = gfc::t_hat_witness();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfc::verify_linear_aut(mu, w));
  }
}
BENCHMARK(BM_VerifyLinearAut);

void BM_OrbitEnumeration(benchmark::State& state) {
  gfc::ModuliPoint mu = gfc::random_omega_point(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfc::orbit_values(mu).size());
  }
}
BENCHMARK(BM_OrbitEnumeration);

}  // namespace

BENCHMARK_MAIN();
