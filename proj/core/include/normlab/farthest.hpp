#pragma once

#include <string>
#include <vector>

#include "normlab/space.hpp"
#include "normlab/verdict.hpp"

namespace normlab {

/// Finite point set; the farthest-distance sup is an exact maximum here.
struct PointSet {
  std::vector<Vec> points;
  std::string label;
};

struct FarthestReport {
  Vec query;
  double far_distance = 0.0;
  std::vector<Vec> attaining;  // within tie tolerance of the max
  bool unique = false;
};

double farthest_distance(const NormedSpace& s, const Vec& x, const PointSet& K);

FarthestReport farthest_points(const NormedSpace& s, const Vec& x, const PointSet& K,
                               double tie_tol = 1e-6);

/// Union of attaining sets over engineered and random queries: random points
/// in a ball of radius 3 diam(K) around the centroid, rays through each
/// point, and (Euclidean, dim 2-3) normal-cone queries that expose every
/// hull vertex.
std::vector<Vec> far_set(const NormedSpace& s, const PointSet& K, int query_samples,
                         uint64_t seed, double tie_tol = 1e-6);

struct DensityReport {
  int samples = 0;
  double unique_fraction = 0.0;
  uint64_t seed = 0;
  bool hlur_warning = false;  // set when the space is not HLUR
};

/// Fraction of box queries whose farthest point is unique at the tie
/// tolerance.
DensityReport density_experiment(const NormedSpace& s, const PointSet& K, const ProbeConfig& cfg);

/// Convex hull vertices of K versus Far K (Euclidean spaces, dim 2 or 3).
Verdict hull_equality_check(const NormedSpace& s, const PointSet& K, const ProbeConfig& cfg);

}  // namespace normlab
