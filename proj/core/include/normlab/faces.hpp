#pragma once

#include <cstdint>
#include <vector>

#include "normlab/sets.hpp"
#include "normlab/space.hpp"
#include "normlab/verdict.hpp"

namespace normlab {

/// Extreme points of a set of norming functionals (a face of the dual ball).
struct FunctionalSet {
  std::vector<Functional> extreme;
  bool exact = true;

  bool singleton() const { return extreme.size() == 1; }
};

/// Argmax set of a dual-unit functional over the ball. Exact vertex lists for
/// polytope families, closed-form points for the smooth/rotund families,
/// the flat segment for the stadium equator functionals. Never empty.
FaceSet exposed_face(const NormedSpace& s, const Functional& f);

/// J(x): norming functionals of a sphere point, as the extreme points of the
/// corresponding dual face. Exact for every built-in family.
FunctionalSet duality_map(const NormedSpace& s, const Vec& x);

/// Union of exposed faces over the extreme points of J(x); equivalently the
/// sphere points y with ||x + y|| = 2.
FaceSet a0_set(const NormedSpace& s, const Vec& x);

/// Sample of { y in ball : f(y) >= 1 - delta }, anchored so it is never
/// reported empty; carries the exact clipped polytope for polyhedral
/// families and the exact chord endpoints in 2D.
RegionSample slice_region(const NormedSpace& s, const Functional& f, double delta, int count,
                          uint64_t seed);

/// Sample of D[x, delta] = { y in ball : ||(x+y)/2|| >= 1 - delta }; a union
/// of clipped polytopes for polyhedral families.
RegionSample d_region(const NormedSpace& s, const Vec& x, double delta, int count, uint64_t seed);

/// D[x, delta] restricted to the sphere.
RegionSample c_region(const NormedSpace& s, const Vec& x, double delta, int count, uint64_t seed);

/// Whether all exposed faces over J(x) coincide; failing certificate carries
/// the two functionals and their Hausdorff distance.
Verdict face_coincidence(const NormedSpace& s, const Vec& x);

/// Deterministic directed Hausdorff distance from the slice to its face
/// (the face is contained in the slice, so this is the full distance).
/// Exact for polyhedral and Euclidean families; 2D boundary scan otherwise.
double slice_face_hausdorff(const NormedSpace& s, const Functional& f, double delta);

/// Deterministic directed Hausdorff distance from D[x, delta] to A0(x).
double dset_a0_hausdorff(const NormedSpace& s, const Vec& x, double delta);

}  // namespace normlab
