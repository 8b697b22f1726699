#include <doctest.h>

#include <cmath>

#include "normlab/catalogue.hpp"
#include "normlab/rng.hpp"
#include "normlab/sets.hpp"
#include "normlab/space.hpp"

namespace {
const normlab::Catalogue& builtin_catalogue() {
  static normlab::Catalogue cat = normlab::Catalogue::builtins();
  return cat;
}
}  // namespace


using namespace normlab;

namespace {

// independent 2D dual-norm oracle: dense angular scan of f(x)/||x||
double dual_norm_scan_2d(const NormedSpace& s, const Functional& f) {
  double best = 0.0;
  for (int k = 0; k < 200000; ++k) {
    double t = M_PI * k / 200000.0;
    Vec d{std::cos(t), std::sin(t)};
    best = std::max(best, std::abs(f(d)) / s.norm(d));
  }
  return best;
}

}  // namespace

TEST_CASE("norm: values pinned by the definitions") {
  NormedSpace linf(2, LpFamily{kInf});
  CHECK(linf.norm(Vec{1, 1}) == 1.0);

  NormedSpace mix(2, OneTwoMixFamily{});
  CHECK(mix.norm(Vec{1, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  for (const auto& [label, s] : builtin_catalogue().spaces()) {
    INFO(label);
    CHECK(s.norm(Vec::zero(s.dim())) == 0.0);
  }
}

TEST_CASE("norm: lens and stadium boundary points") {
  NormedSpace lens(2, LensFamily{0.5, 1.0});
  double h = std::sqrt(1.0 - 0.25);
  CHECK(lens.norm(Vec{0.0, h}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lens.norm(Vec{0.5, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));

  NormedSpace st(2, StadiumFamily{0.5, 1.0});
  CHECK(st.norm(Vec{0.5, 1.0}) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(st.norm(Vec{1.5, 0.0}) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(st.norm(Vec{0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("norm axioms hold on sampled points for every family") {
  for (const auto& [label, s] : builtin_catalogue().spaces()) {
    INFO(label);
    CHECK_NOTHROW(spot_check_norm_axioms(s, 64, 7));
    auto pts = s.sphere_sample(64, 11);
    RngStream rs(3, "alpha");
    for (size_t i = 0; i + 1 < pts.size(); i += 2) {
      const Vec& x = pts[i];
      const Vec& y = pts[i + 1];
      CHECK(s.norm(x + y) <= s.norm(x) + s.norm(y) + 1e-12);
      double a = rs.uniform(-4.0, 4.0);
      CHECK(s.norm(a * x) == doctest::Approx(std::abs(a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("dual_norm: pinned values") {
  NormedSpace linf(2, LpFamily{kInf});
  CHECK(linf.dual_norm(Functional{{0.5, 0.5}}) == 1.0);
  CHECK(linf.dual_norm(Functional{{0.0, 0.0}}) == 0.0);

  // regular hexagon: brute-force oracle over the six vertices
  const auto& hexagon = *builtin_catalogue().find("hexagon");
  Functional f{{1.0, 0.0}};
  double oracle = 0.0;
  for (int k = 0; k < 6; ++k) {
    double a = M_PI * k / 3.0;
    oracle = std::max(oracle, f(Vec{std::cos(a), std::sin(a)}));
  }
  CHECK(oracle == doctest::Approx(1.0));
  CHECK(hexagon.dual_norm(f) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("dual_norm: Hoelder conjugates for lp") {
  Functional f{{0.3, -1.2}};
  CHECK(NormedSpace(2, LpFamily{1.0}).dual_norm(f) == lp_norm(f.as_vec(), kInf));
  CHECK(NormedSpace(2, LpFamily{2.0}).dual_norm(f) == lp_norm(f.as_vec(), 2.0));
  CHECK(NormedSpace(2, LpFamily{kInf}).dual_norm(f) == lp_norm(f.as_vec(), 1.0));

  NormedSpace p15(2, LpFamily{1.5});
  CHECK(p15.dual_norm(f) == doctest::Approx(lp_norm(f.as_vec(), 3.0)).epsilon(1e-10));
  CHECK(p15.dual_norm(f) == doctest::Approx(dual_norm_scan_2d(p15, f)).epsilon(1e-8));
}

TEST_CASE("dual_norm: mix family against the scan oracle") {
  NormedSpace mix(2, OneTwoMixFamily{});
  CHECK(mix.dual_norm(Functional{{1.0, 0.0}}) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  for (const auto& fv : {Vec{0.3, -0.8}, Vec{1.1, 0.2}, Vec{-0.5, -0.5}}) {
    Functional f{fv};
    CHECK(mix.dual_norm(f) == doctest::Approx(dual_norm_scan_2d(mix, f)).epsilon(1e-8));
  }
}

TEST_CASE("dual_norm: lens and stadium against the scan oracle") {
  for (const char* label : {"lens_default", "stadium_default"}) {
    const auto& s = *builtin_catalogue().find(label);
    INFO(label);
    for (const auto& fv : {Vec{1.0, 0.0}, Vec{0.2, 0.9}, Vec{-0.7, 0.3}, Vec{0.0, 1.0}}) {
      Functional f{fv};
      CHECK(s.dual_norm(f) == doctest::Approx(dual_norm_scan_2d(s, f)).epsilon(1e-8));
    }
  }
}

TEST_CASE("subgradient: pinned examples and the norming contract") {
  NormedSpace l2(2, LpFamily{2.0});
  auto f = l2.subgradient(Vec{0, 1});
  CHECK(f.as_vec()[0] == doctest::Approx(0.0));
  CHECK(f.as_vec()[1] == doctest::Approx(1.0));

  NormedSpace linf(2, LpFamily{kInf});
  auto g = linf.subgradient(Vec{0, 1});
  // oracle: among dual-ball extreme points only (0,1) norms x = (0,1)
  for (const Vec& cand : {Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}}) {
    Functional c{cand};
    if (std::abs(c(Vec{0, 1}) - 1.0) <= 1e-12) {
      CHECK(norm_linf(g.as_vec() - cand) <= 1e-12);
    }
  }

  // deterministic tie-breaks at non-smooth points
  CHECK(norm_linf(linf.subgradient(Vec{1, 1}).as_vec() - Vec{0, 1}) <= 1e-12);
  NormedSpace l1(2, LpFamily{1.0});
  CHECK(norm_linf(l1.subgradient(Vec{1, 0}).as_vec() - Vec{1, -1}) <= 1e-12);
}

TEST_CASE("subgradient: mix closed form on a unit vector with nonzero coords") {
  NormedSpace mix(2, OneTwoMixFamily{});
  Vec x0 = mix.normalize(Vec{2.0, -1.0});
  auto f = mix.subgradient(x0);
  CHECK(f(x0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mix.dual_norm(f) == doctest::Approx(1.0).epsilon(1e-9));
  // formula (|x|_1 sign(x) + x) / ||x|| at a unit point
  double a = norm_l1(x0);
  Vec expect{a + x0[0], -a + x0[1]};
  CHECK(norm_linf(f.as_vec() - expect) <= 1e-12);
}

TEST_CASE("subgradient: norming contract across the catalogue") {
  for (const auto& [label, s] : builtin_catalogue().spaces()) {
    INFO(label);
    for (const auto& x : s.sphere_sample(40, 123)) {
      auto f = s.subgradient(x);
      CHECK(f(x) == doctest::Approx(s.norm(x)).epsilon(1e-9));
      CHECK(s.dual_norm(f) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("sphere_sample: unit norms, determinism, symmetry") {
  for (const auto& [label, s] : builtin_catalogue().spaces()) {
    INFO(label);
    auto v = s.sphere_sample(3, 99);
    REQUIRE(v.size() == 3);
    for (const auto& x : v) CHECK(std::abs(s.norm(x) - 1.0) <= 1e-12);
    auto w = s.sphere_sample(3, 99);
    for (int i = 0; i < 3; ++i) CHECK(norm_linf(v[static_cast<size_t>(i)] - w[static_cast<size_t>(i)]) == 0.0);
  }

  NormedSpace l2(2, LpFamily{2.0});
  auto big = l2.sphere_sample(10000, 5);
  Vec mean = Vec::zero(2);
  for (const auto& x : big) mean = mean + x;
  mean = (1.0 / 10000.0) * mean;
  CHECK(norm_l2(mean) <= 0.05);
}

TEST_CASE("distance_to_set: pinned examples") {
  NormedSpace linf(2, LpFamily{kInf});
  FaceSet corner = FaceSet::singleton(Vec{1, 1});
  CHECK(distance_to_set(linf, Vec{0, 1}, corner).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(distance_to_set(linf, Vec{1, 1}, corner).value == doctest::Approx(0.0));

  // Euclidean projection onto a segment; brute-force grid oracle first
  NormedSpace l2(2, LpFamily{2.0});
  Vec a{1, -1}, b{1, 1}, q{0, 0};
  double oracle = kInf;
  for (int k = 0; k <= 100000; ++k) {
    double t = k / 100000.0;
    oracle = std::min(oracle, norm_l2(q - (a + t * (b - a))));
  }
  CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));
  FaceSet seg = FaceSet::polytope({a, b});
  CHECK(distance_to_set(l2, q, seg).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("polytope V and dualized H representations give the same norm") {
  const auto& hexagon = *builtin_catalogue().find("hexagon");
  std::vector<Functional> facets = hexagon.poly().facets;
  NormedSpace hexH(2, PolytopeHFamily{facets});
  for (const auto& x : hexagon.sphere_sample(1000, 21)) {
    Vec y = 1.37 * x;
    CHECK(hexH.norm(y) == doctest::Approx(hexagon.norm(y)).epsilon(1e-10));
  }
}

TEST_CASE("space: error paths") {
  NormedSpace l2(2, LpFamily{2.0});
  CHECK_THROWS_AS(l2.norm(Vec{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(l2.subgradient(Vec::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(l2.sphere_sample(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((Vec{1.0, std::numeric_limits<double>::quiet_NaN()}), std::invalid_argument);
  CHECK_THROWS_AS(NormedSpace(2, LensFamily{1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(NormedSpace(2, StadiumFamily{-1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(NormedSpace(2, LpFamily{0.5}), std::invalid_argument);
  // asymmetric vertex list
  CHECK_THROWS_AS(NormedSpace(2, PolytopeVFamily{{Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}}}),
                  std::invalid_argument);
  FaceSet empty;
  CHECK_THROWS_AS(distance_to_set(l2, Vec{0, 0}, empty), std::invalid_argument);
}
