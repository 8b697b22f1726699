#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normlab/space.hpp"
#include "normlab/vec.hpp"

namespace normlab {

/// A face-like subset of the ball: an exact union of convex polytope pieces
/// (each a vertex list), a tolerance-tagged point cloud, or both.
struct FaceSet {
  std::vector<std::vector<Vec>> pieces;
  std::vector<Vec> cloud;
  double mesh = 0.0;  // cloud resolution; 0 when the set is exact
  std::optional<Functional> exposing;

  bool exact() const { return cloud.empty(); }
  bool empty() const { return pieces.empty() && cloud.empty(); }

  /// Piece vertices plus cloud points.
  std::vector<Vec> sample_points() const;

  static FaceSet singleton(Vec p);
  static FaceSet polytope(std::vector<Vec> vertices);
  static FaceSet union_of(std::vector<std::vector<Vec>> pieces);
  static FaceSet from_cloud(std::vector<Vec> points, double mesh);
};

/// Sampled region of the ball (slice or D-set). Every point satisfies the
/// defining inequality within tolerance; for polyhedral families the exact
/// convex pieces of the region ride along.
struct RegionSample {
  std::vector<Vec> points;
  std::string defining;
  std::vector<std::vector<Vec>> exact_pieces;
  double mesh = 0.0;
};

FaceSet as_face_set(const RegionSample& r);

struct SetDistance {
  double value = 0.0;
  double mesh_error = 0.0;  // 0 when exact
};

/// Distance from x to the convex hull of `piece`, in the space norm. Exact
/// for points, segments, polyhedral norms (LP) and 2D polygons; Euclidean
/// polytopes in higher dimension go through a projected-gradient solve.
double dist_to_convex(const NormedSpace& s, const Vec& x, const std::vector<Vec>& piece);

SetDistance distance_to_set(const NormedSpace& s, const Vec& x, const FaceSet& S);

struct HausdorffResult {
  double value = 0.0;
  double mesh_error = 0.0;
  bool exact = true;
};

/// sup_{a in from} d(a, to). Exact when `from` is polyhedral and `to` is a
/// single convex piece; otherwise edge refinement bounds the error.
HausdorffResult hausdorff_directed(const NormedSpace& s, const FaceSet& from, const FaceSet& to);

HausdorffResult hausdorff(const NormedSpace& s, const FaceSet& A, const FaceSet& B);

}  // namespace normlab
