#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "normlab/hull.hpp"

using namespace normlab;

namespace {

bool contains_point(const std::vector<Vec>& pts, const Vec& p, double tol = 1e-9) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const Vec& q) { return norm_linf(p - q) <= tol; });
}

}  // namespace

TEST_CASE("hull2d: square with interior chaff") {
  std::vector<Vec> pts = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {0, 0}, {0.5, 0.2}, {1, 1}};
  auto h = convex_hull_2d(pts);
  CHECK(h.size() == 4);
  CHECK(contains_point(h, Vec{1, 1}));
  CHECK_FALSE(contains_point(h, Vec{0, 0}));
}

TEST_CASE("hull2d: facets of the square are the axis functionals") {
  auto h = convex_hull_2d({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  auto facets = polygon_facets_offset1(h);
  REQUIRE(facets.size() == 4);
  for (const auto& f : facets) {
    for (const auto& v : h) CHECK(f(v) <= 1.0 + 1e-12);
  }
  std::vector<Vec> normals;
  for (const auto& f : facets) normals.push_back(f.as_vec());
  CHECK(contains_point(normals, Vec{1, 0}));
  CHECK(contains_point(normals, Vec{0, -1}));
}

TEST_CASE("hull2d: clip the square by a slice halfplane") {
  std::vector<Vec> square = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
  double delta = 0.1;
  auto clip = clip_polygon(square, Functional{{0.5, 0.5}}, 1.0 - delta);
  REQUIRE(clip.size() == 3);
  CHECK(contains_point(clip, Vec{1, 1}));
  CHECK(contains_point(clip, Vec{1, 1 - 2 * delta}));
  CHECK(contains_point(clip, Vec{1 - 2 * delta, 1}));
}

TEST_CASE("hull2d: point in polygon") {
  std::vector<Vec> square = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
  CHECK(point_in_polygon(square, Vec{0.3, -0.7}));
  CHECK(point_in_polygon(square, Vec{1, 1}));
  CHECK_FALSE(point_in_polygon(square, Vec{1.2, 0}));
}

TEST_CASE("hull3d: cube combinatorics") {
  std::vector<Vec> cube;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0}) cube.push_back(Vec{sx, sy, sz});
  auto h = convex_hull_3d(cube);
  CHECK(h.vertices.size() == 8);
  auto facets = hull3_facets_offset1(h);
  CHECK(facets.size() == 6);
  auto edges = hull3_edges(h);
  CHECK(edges.size() == 12);
}

TEST_CASE("hull3d: face-interior points are not vertices") {
  std::vector<Vec> pts;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0}) pts.push_back(Vec{sx, sy, sz});
  pts.push_back(Vec{1.0, 0.0, 0.0});   // face interior
  pts.push_back(Vec{1.0, 1.0, 0.0});   // edge interior
  pts.push_back(Vec{0.2, -0.1, 0.3});  // body interior
  auto h = convex_hull_3d(pts);
  CHECK(h.vertices.size() == 8);
  CHECK_FALSE(contains_point(h.vertices, Vec{1, 0, 0}));
  CHECK_FALSE(contains_point(h.vertices, Vec{1, 1, 0}));
}

TEST_CASE("hull3d: octahedron and a clip") {
  std::vector<Vec> oct = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  auto h = convex_hull_3d(oct);
  CHECK(h.vertices.size() == 6);
  CHECK(hull3_facets_offset1(h).size() == 8);
  auto edges = hull3_edges(h);
  CHECK(edges.size() == 12);

  auto clip = clip_polytope_3d(h.vertices, edges, Functional{{1, 0, 0}}, 0.5);
  // surviving vertex (1,0,0) plus four edge cuts at x = 0.5
  CHECK(clip.size() == 5);
  CHECK(contains_point(clip, Vec{1, 0, 0}));
  CHECK(contains_point(clip, Vec{0.5, 0.5, 0}));
}
