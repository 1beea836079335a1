#include <benchmark/benchmark.h>

#include "posetpoly/fano.hpp"
#include "posetpoly/gamma.hpp"
#include "posetpoly/lattice_polytope.hpp"
#include "posetpoly/toric.hpp"

using namespace posetpoly;

namespace {

// Antichain pairings give the largest vertex sets at each size.
void BM_HullCC(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto pts = gamma_points(PairingKind::CC, Poset::antichain(d), Poset::antichain(d));
  for (auto _ : state) benchmark::DoNotOptimize(LatticePolytope::hull(pts));
}
BENCHMARK(BM_HullCC)->DenseRange(2, 5);

void BM_Ehrhart(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto g = gamma(PairingKind::OC, poset_P2(d), poset_P1(d));
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart(g));
}
BENCHMARK(BM_Ehrhart)->DenseRange(2, 5);

void BM_SmoothPair(benchmark::State& state) {
  const auto p = poset_P2(4);
  const auto q = Poset::from_covers(4, {{1, 2}, {3, 4}});
  for (auto _ : state) {
    for (PairingKind k : {PairingKind::OO, PairingKind::OC, PairingKind::CC}) {
      const auto g = gamma(k, p, q);
      benchmark::DoNotOptimize(ehrhart(g));
      if (is_fano(g)) benchmark::DoNotOptimize(is_smooth(g));
    }
  }
}
BENCHMARK(BM_SmoothPair);

void BM_Equivalence(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto oo = gamma(PairingKind::OO, poset_P2(d), poset_P2(d));
  const auto cc = gamma(PairingKind::CC, poset_P2(d), poset_P2(d));
  for (auto _ : state) benchmark::DoNotOptimize(unimodular_equivalent(oo, cc));
}
BENCHMARK(BM_Equivalence)->DenseRange(3, 5);

void BM_Buchberger(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ToricRing ring(PairingKind::CC, Poset::antichain(d), poset_P2(d));
  const auto g = generators_G(ring);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_verify(ring, g));
}
BENCHMARK(BM_Buchberger)->DenseRange(2, 3);

}  // namespace

BENCHMARK_MAIN();
