#pragma once

#include <array>
#include <utility>
#include <vector>

#include "normlab/vec.hpp"

namespace normlab {

/// 2D convex hull, counterclockwise, duplicate points merged. Input points
/// need not be distinct.
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts, double tol = 1e-12);

/// Facets of a CCW polygon that contains the origin strictly inside, each
/// normalized so the edge lies on { x : <a,x> = 1 }.
std::vector<Functional> polygon_facets_offset1(const std::vector<Vec>& hull);

/// Keep the part of a CCW polygon with f(x) >= rhs (single halfplane clip).
std::vector<Vec> clip_polygon(const std::vector<Vec>& poly, const Functional& f, double rhs);

bool point_in_polygon(const std::vector<Vec>& poly, const Vec& p, double tol = 1e-9);

struct Hull3 {
  std::vector<Vec> vertices;                 // extreme points only
  std::vector<std::array<int, 3>> faces;     // outward-oriented triangles into `vertices`
};

/// Brute-force 3D hull (all supporting planes through point triples). Exact
/// and robust for the small point sets this project handles; O(m^4).
Hull3 convex_hull_3d(const std::vector<Vec>& pts, double tol = 1e-9);

/// Distinct facet planes of a hull that contains the origin strictly inside,
/// normalized to { x : <a,x> = 1 }.
std::vector<Functional> hull3_facets_offset1(const Hull3& h, double tol = 1e-9);

/// True edges (vertex index pairs lying on two distinct facet planes).
std::vector<std::pair<int, int>> hull3_edges(const Hull3& h, double tol = 1e-9);

/// Vertices of the intersection of a 3D polytope with { f(x) >= rhs }:
/// surviving vertices plus edge cut points.
std::vector<Vec> clip_polytope_3d(const std::vector<Vec>& vertices,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const Functional& f, double rhs);

}  // namespace normlab
