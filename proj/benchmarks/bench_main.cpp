#include "rhoqes/geometry.hpp"
#include "rhoqes/oscillator.hpp"
#include "rhoqes/sl7.hpp"
#include "rhoqes/spectra.hpp"
#include "rhoqes/symmetries.hpp"

#include <benchmark/benchmark.h>

using namespace rhoqes;

namespace {

const MassConfig kMasses = MassConfig::finite({1, 2, 3, 4});

Point sample_point() { return {Rational(3), Rational(4), Rational(5), Rational(5), Rational(4), Rational(3)}; }

void bm_build_h_es(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_h_es(kMasses, GaugeParams{}, 3));
}
BENCHMARK(bm_build_h_es);

void bm_h_es_from_generators(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(h_es_from_generators(kMasses, GaugeParams{}, 3));
}
BENCHMARK(bm_h_es_from_generators);

void bm_matrix_on_basis(benchmark::State& st) {
  const auto h = build_h_es(kMasses, GaugeParams{}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(matrix_on_basis(h, static_cast<int>(st.range(0))));
}
BENCHMARK(bm_matrix_on_basis)->DenseRange(1, 4);

void bm_spectrum(benchmark::State& st) {
  const auto h = build_h_es(kMasses, GaugeParams{}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(spectrum(h, static_cast<int>(st.range(0))));
}
BENCHMARK(bm_spectrum)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void bm_v4_squared(benchmark::State& st) {
  const Point x = sample_point();
  for (auto _ : st) benchmark::DoNotOptimize(v4_squared(x));
}
BENCHMARK(bm_v4_squared);

void bm_cayley_menger(benchmark::State& st) {
  const Point x = sample_point();
  for (auto _ : st) benchmark::DoNotOptimize(cayley_menger_v4_squared(x));
}
BENCHMARK(bm_cayley_menger);

void bm_det_identity(benchmark::State& st) {
  const Point x = sample_point();
  for (auto _ : st) benchmark::DoNotOptimize(det_identity_check(kMasses, x));
}
BENCHMARK(bm_det_identity);

void bm_symmetry_suite(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_symmetry_suite(kMasses, 3));
}
BENCHMARK(bm_symmetry_suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
