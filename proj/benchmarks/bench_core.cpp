#include <benchmark/benchmark.h>

#include "normlab/catalogue.hpp"
#include "normlab/daugavet.hpp"
#include "normlab/faces.hpp"

using namespace normlab;

namespace {

const Catalogue& cat() {
  static Catalogue c = Catalogue::builtins();
  return c;
}

void BM_Norm(benchmark::State& state, const char* label) {
  const auto& s = *cat().find(label);
  auto pts = s.sphere_sample(256, 7);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.norm(pts[i++ & 255]));
  }
}
BENCHMARK_CAPTURE(BM_Norm, l2_2, "l2_2");
BENCHMARK_CAPTURE(BM_Norm, linf_3, "linf_3");
BENCHMARK_CAPTURE(BM_Norm, hexagon, "hexagon");
BENCHMARK_CAPTURE(BM_Norm, lens, "lens_default");
BENCHMARK_CAPTURE(BM_Norm, stadium, "stadium_default");
BENCHMARK_CAPTURE(BM_Norm, mix, "one_two_mix_2");

void BM_DualNorm(benchmark::State& state, const char* label) {
  const auto& s = *cat().find(label);
  auto pts = s.sphere_sample(256, 11);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.dual_norm(Functional{pts[i++ & 255]}));
  }
}
BENCHMARK_CAPTURE(BM_DualNorm, hexagon, "hexagon");
BENCHMARK_CAPTURE(BM_DualNorm, mix, "one_two_mix_2");

void BM_ExposedFace(benchmark::State& state, const char* label) {
  const auto& s = *cat().find(label);
  auto pts = s.sphere_sample(64, 13);
  size_t i = 0;
  for (auto _ : state) {
    Functional f = s.normalize_dual(Functional{pts[i++ & 63]});
    benchmark::DoNotOptimize(exposed_face(s, f));
  }
}
BENCHMARK_CAPTURE(BM_ExposedFace, linf_3, "linf_3");
BENCHMARK_CAPTURE(BM_ExposedFace, lens, "lens_default");

void BM_SliceHausdorff(benchmark::State& state, const char* label) {
  const auto& s = *cat().find(label);
  Functional f = s.normalize_dual(Functional{s.sphere_sample(1, 17).front()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(slice_face_hausdorff(s, f, 1.0 / 1024.0));
  }
}
BENCHMARK_CAPTURE(BM_SliceHausdorff, linf_2, "linf_2");
BENCHMARK_CAPTURE(BM_SliceHausdorff, stadium, "stadium_default");

void BM_OperatorNorm2x2(benchmark::State& state, const char* label) {
  const auto& s = *cat().find(label);
  ProbeConfig cfg;
  OperatorMatrix T = OperatorMatrix::from_rows({{0.3, 1.1}, {-0.4, 0.2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(operator_norm(s, T, cfg));
  }
}
BENCHMARK_CAPTURE(BM_OperatorNorm2x2, linf_2, "linf_2");
BENCHMARK_CAPTURE(BM_OperatorNorm2x2, mix, "one_two_mix_2");

}  // namespace

BENCHMARK_MAIN();
