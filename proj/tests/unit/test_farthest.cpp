#include <doctest.h>

#include <cmath>

#include "normlab/catalogue.hpp"
#include "normlab/farthest.hpp"
#include "normlab/hull.hpp"
#include "normlab/rng.hpp"


using namespace normlab;

namespace {

const PointSet kSquare{{Vec{1, 1}, Vec{1, -1}, Vec{-1, 1}, Vec{-1, -1}}, "square"};

bool contains_point(const std::vector<Vec>& pts, const Vec& p, double tol = 1e-9) {
  for (const auto& q : pts)
    if (norm_linf(p - q) <= tol) return true;
  return false;
}

PointSet random_cloud(int n, uint64_t seed, double spread = 2.0) {
  PointSet K;
  K.label = "cloud";
  RngStream rs(seed, "cloud");
  for (int i = 0; i < n; ++i) K.points.push_back(Vec{spread * rs.uniform(-1, 1), spread * rs.uniform(-1, 1)});
  return K;
}

}  // namespace

TEST_CASE("farthest_distance: enumerated maxima") {
  NormedSpace l2(2, LpFamily{2.0});
  CHECK(farthest_distance(l2, Vec{3, 4}, PointSet{{Vec{3, 4}}, "self"}) == 0.0);
  CHECK(farthest_distance(l2, Vec{2, 0}, kSquare) == doctest::Approx(std::sqrt(10.0)));

  NormedSpace linf(2, LpFamily{kInf});
  CHECK(farthest_distance(linf, Vec{2, 0}, kSquare) == doctest::Approx(3.0));

  CHECK_THROWS_AS(farthest_distance(l2, Vec{0, 0}, PointSet{}), std::invalid_argument);
}

TEST_CASE("farthest_points: ties and their resolution") {
  NormedSpace l2(2, LpFamily{2.0});
  auto tie = farthest_points(l2, Vec{2, 0}, kSquare);
  CHECK(tie.attaining.size() == 2);
  CHECK_FALSE(tie.unique);
  CHECK(contains_point(tie.attaining, Vec{-1, 1}));
  CHECK(contains_point(tie.attaining, Vec{-1, -1}));

  auto broken = farthest_points(l2, Vec{2, 0.1}, kSquare);
  REQUIRE(broken.unique);
  CHECK(contains_point(broken.attaining, Vec{-1, -1}));

  auto single = farthest_points(l2, Vec{5, 5}, PointSet{{Vec{1, 0}}, "one"});
  CHECK(single.unique);
}

TEST_CASE("far_set: two points, square, interior point never attains") {
  NormedSpace l2(2, LpFamily{2.0});
  auto two = far_set(l2, PointSet{{Vec{0, 0}, Vec{1, 0}}, "pair"}, 64, 9);
  CHECK(two.size() == 2);

  auto sq = far_set(l2, kSquare, 64, 9);
  CHECK(sq.size() == 4);

  PointSet with_center = kSquare;
  with_center.points.push_back(Vec{0, 0});
  auto far = far_set(l2, with_center, 256, 9);
  CHECK_FALSE(contains_point(far, Vec{0, 0}));
  CHECK(far.size() == 4);
}

TEST_CASE("far_set is contained in the hull vertices") {
  NormedSpace l2(2, LpFamily{2.0});
  for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    PointSet K = random_cloud(20, seed);
    auto hull = convex_hull_2d(K.points);
    for (const auto& p : far_set(l2, K, 128, seed)) CHECK(contains_point(hull, p));
  }
}

TEST_CASE("farthest distance is 1-Lipschitz and attains at hull vertices") {
  NormedSpace l2(2, LpFamily{2.0});
  PointSet K = random_cloud(15, 4);
  auto hull = convex_hull_2d(K.points);
  RngStream rs(8, "queries");
  for (int t = 0; t < 40; ++t) {
    Vec x{rs.uniform(-6, 6), rs.uniform(-6, 6)};
    Vec y{rs.uniform(-6, 6), rs.uniform(-6, 6)};
    double fx = farthest_distance(l2, x, K), fy = farthest_distance(l2, y, K);
    CHECK(std::abs(fx - fy) <= norm_l2(x - y) + 1e-12);
    if (!point_in_polygon(hull, x)) {
      for (const auto& p : farthest_points(l2, x, K).attaining)
        CHECK(contains_point(hull, p));
    }
  }
}

TEST_CASE("density_experiment: euclidean uniqueness is generic") {
  ProbeConfig cfg;
  cfg.samples = 2000;
  cfg.seed = 31;
  NormedSpace l2(2, LpFamily{2.0});
  auto rep = density_experiment(l2, random_cloud(20, 12), cfg);
  CHECK_FALSE(rep.hlur_warning);
  CHECK(rep.unique_fraction >= 0.99);

  auto one = density_experiment(l2, PointSet{{Vec{0.5, -0.25}}, "one"}, cfg);
  CHECK(one.unique_fraction == 1.0);
}

TEST_CASE("density_experiment: max-norm tie regions have positive area") {
  ProbeConfig cfg;
  cfg.samples = 2000;
  cfg.seed = 31;
  NormedSpace linf(2, LpFamily{kInf});
  auto rep = density_experiment(linf, kSquare, cfg);
  CHECK(rep.hlur_warning);
  CHECK(rep.unique_fraction <= 0.5);  // whole wedges |x1|>|x2| tie two corners
}

TEST_CASE("density_experiment: reproducible across seeds") {
  ProbeConfig a;
  a.samples = 10000;
  a.seed = 1;
  ProbeConfig b = a;
  b.seed = 2;
  NormedSpace l2(2, LpFamily{2.0});
  PointSet K = random_cloud(20, 77);
  double fa = density_experiment(l2, K, a).unique_fraction;
  double fb = density_experiment(l2, K, b).unique_fraction;
  CHECK(std::abs(fa - fb) <= 0.005);
}

TEST_CASE("hull_equality_check: squares, chaff, and random trials") {
  ProbeConfig cfg;
  cfg.samples = 6400;
  cfg.seed = 5;
  NormedSpace l2(2, LpFamily{2.0});

  CHECK(hull_equality_check(l2, kSquare, cfg).holds());

  PointSet with_center = kSquare;
  with_center.points.push_back(Vec{0, 0});
  CHECK(hull_equality_check(l2, with_center, cfg).holds());

  for (uint64_t seed = 0; seed < 50; ++seed) {
    PointSet K = random_cloud(20, 1000 + seed);
    INFO("trial seed ", seed);
    CHECK(hull_equality_check(l2, K, cfg).holds());
  }

  NormedSpace linf(2, LpFamily{kInf});
  CHECK_THROWS_AS(hull_equality_check(linf, kSquare, cfg), std::invalid_argument);
}

TEST_CASE("hull_equality_check: dim 3") {
  ProbeConfig cfg;
  cfg.samples = 6400;
  cfg.seed = 5;
  NormedSpace l2(3, LpFamily{2.0});
  PointSet K;
  K.label = "octa";
  for (int i = 0; i < 3; ++i)
    for (double sgn : {1.0, -1.0}) {
      Vec v = Vec::zero(3);
      v[i] = sgn;
      K.points.push_back(v);
    }
  K.points.push_back(Vec{0.1, 0.1, 0.1});
  CHECK(hull_equality_check(l2, K, cfg).holds());
}
