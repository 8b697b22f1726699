#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "normlab/vec.hpp"

namespace normlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// p in [1, inf]; use kInf for the max norm.
struct LpFamily {
  double p = 2.0;
};

/// Unit ball given as the convex hull of a symmetric vertex list.
struct PolytopeVFamily {
  std::vector<Vec> vertices;
};

/// Unit ball given as { x : f_i(x) <= 1 } for a symmetric facet list.
struct PolytopeHFamily {
  std::vector<Functional> facets;
};

/// sqrt(|x|_1^2 + |x|_2^2); rotund but not smooth.
struct OneTwoMixFamily {};

/// Intersection of the two discs of radius R centered at (+-d, 0); a 2D
/// witness for rotund-but-not-smooth with corner points.
struct LensFamily {
  double d = 0.5;
  double R = 1.0;
};

/// Points within distance r of the segment [(-c,0),(c,0)]; a 2D witness for
/// smooth-but-not-rotund with flat top and bottom edges.
struct StadiumFamily {
  double c = 0.5;
  double r = 1.0;
};

using NormFamily =
    std::variant<LpFamily, PolytopeVFamily, PolytopeHFamily, OneTwoMixFamily, LensFamily,
                 StadiumFamily>;

/// Exact combinatorics of a polyhedral unit ball. `facets` may be empty for
/// V-polytopes above dimension 3 (norms still work through the LP gauge);
/// `edges` is filled for dimensions 2 and 3 only.
struct PolyhedralView {
  std::vector<Vec> vertices;
  std::vector<Functional> facets;  // <a,x> <= 1
  std::vector<std::pair<int, int>> edges;
};

/// A finite-dimensional real normed space: the norm oracle plus its dual
/// norm, support points, subgradients and seeded sphere sampling. Immutable
/// after construction; all operations are const and safe to call
/// concurrently.
class NormedSpace {
 public:
  NormedSpace(int dim, NormFamily family, double tol = 1e-9);

  int dim() const { return dim_; }
  double tol() const { return tol_; }
  const NormFamily& family() const { return family_; }
  std::string family_kind() const;

  double norm(const Vec& x) const;

  /// sup { f(x) : norm(x) <= 1 }. Exact for every family except the mix
  /// norm, where a certified 2D scan / multistart ascent is used.
  double dual_norm(const Functional& f) const;

  /// One argmax of f over the unit ball (deterministic).
  Vec support_point(const Functional& f) const;

  /// A norming functional: f(x) = norm(x), dual_norm(f) = 1. At non-smooth
  /// points returns the lexicographically smallest extreme support
  /// functional.
  Functional subgradient(const Vec& x) const;

  /// Unit vectors, radially normalized from uniform Euclidean directions.
  /// Deterministic per (seed, index): draw i never depends on count.
  std::vector<Vec> sphere_sample(int count, uint64_t seed) const;

  Vec normalize(const Vec& x) const;
  Functional normalize_dual(const Functional& f) const;

  bool on_sphere(const Vec& x, double slack = -1.0) const;

  bool is_polyhedral() const { return poly_.has_value(); }
  const PolyhedralView& poly() const;

 private:
  void build_polyhedral_view();
  void validate() const;

  int dim_ = 0;
  NormFamily family_;
  double tol_ = 1e-9;
  std::optional<PolyhedralView> poly_;
};

double lp_norm(const Vec& x, double p);
double holder_conjugate(double p);

}  // namespace normlab
