#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "random_jets.hpp"
#include "rounding_forge/circles.hpp"
#include "rounding_forge/cliff.hpp"
#include "rounding_forge/jets.hpp"
#include "rounding_forge/spheres.hpp"

using namespace rounding_forge;
using namespace rounding_forge::testing;

namespace {

std::vector<Jet2> jet_batch(int count) {
  Rng rng(7);
  std::vector<Jet2> out;
  for (int i = 0; i < count; ++i) out.push_back(random_valid_jet(rng).jet);
  return out;
}

void BM_ValidateAndCanonical(benchmark::State& state) {
  const auto jets = jet_batch(32);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_rounding(validate_jet(jets[i++ % jets.size()])));
  }
}
BENCHMARK(BM_ValidateAndCanonical);

void BM_CircleRankExact(benchmark::State& state) {
  const FracQuadMap psi = canonical_rounding(validate_jet(quaternion_jet()));
  const Line line(RationalVector{1, 0, 2, 1, -1, 3, 1}, RationalVector{2, 1, -1, 0, 1, 1, 4});
  for (auto _ : state) benchmark::DoNotOptimize(circle_rank_exact(restrict_to_line(psi, line)));
}
BENCHMARK(BM_CircleRankExact);

void BM_NumericOracle(benchmark::State& state) {
  const FracQuadMap psi = canonical_rounding(validate_jet(complex_square_jet()));
  OracleOptions options;
  options.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(verify_rounding_numeric(psi, options));
}
BENCHMARK(BM_NumericOracle);

void BM_SphereLift(benchmark::State& state) {
  const RoundingJet rj = validate_jet(quaternion_jet());
  for (auto _ : state) benchmark::DoNotOptimize(sphere_lift(rj));
}
BENCHMARK(BM_SphereLift);

void BM_NormedPairing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normed_pairing(rho(n), n));
}
BENCHMARK(BM_NormedPairing)->Arg(8)->Arg(16)->Arg(32);

void BM_Kappa(benchmark::State& state) {
  const long long m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kappa(m));
}
BENCHMARK(BM_Kappa)->Arg(255)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
