#include "normlab/sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normlab/hull.hpp"
#include "normlab/lp.hpp"

namespace normlab {

std::vector<Vec> FaceSet::sample_points() const {
  std::vector<Vec> out;
  for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), cloud.begin(), cloud.end());
  return out;
}

FaceSet FaceSet::singleton(Vec p) {
  FaceSet s;
  s.pieces.push_back({std::move(p)});
  return s;
}

FaceSet FaceSet::polytope(std::vector<Vec> vertices) {
  FaceSet s;
  s.pieces.push_back(std::move(vertices));
  return s;
}

FaceSet FaceSet::union_of(std::vector<std::vector<Vec>> pieces) {
  FaceSet s;
  s.pieces = std::move(pieces);
  return s;
}

FaceSet FaceSet::from_cloud(std::vector<Vec> points, double mesh) {
  FaceSet s;
  s.cloud = std::move(points);
  s.mesh = mesh;
  return s;
}

FaceSet as_face_set(const RegionSample& r) {
  FaceSet s;
  if (!r.exact_pieces.empty()) {
    s.pieces = r.exact_pieces;
  } else {
    s.cloud = r.points;
    s.mesh = r.mesh;
  }
  return s;
}

namespace {

// golden-section minimum of a convex function on [0,1]
template <typename F>
double golden_min(F&& f, double lo = 0.0, double hi = 1.0) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

double dist_to_segment(const NormedSpace& s, const Vec& x, const Vec& a, const Vec& b) {
  return golden_min([&](double t) { return s.norm(x - (a + t * (b - a))); });
}

// exact LP distance for polyhedral norms:
//   min sum(mu)  s.t.  P lambda + W mu = x,  sum(lambda) = 1,  lambda, mu >= 0
double dist_lp_polyhedral(const NormedSpace& s, const Vec& x, const std::vector<Vec>& piece) {
  const auto& W = s.poly().vertices;
  const int n = s.dim();
  const size_t np = piece.size(), nw = W.size();
  std::vector<std::vector<double>> A(static_cast<size_t>(n) + 1,
                                     std::vector<double>(np + nw, 0.0));
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    b[static_cast<size_t>(i)] = x[i];
    for (size_t j = 0; j < np; ++j) A[static_cast<size_t>(i)][j] = piece[j][i];
    for (size_t j = 0; j < nw; ++j) A[static_cast<size_t>(i)][np + j] = W[j][i];
  }
  for (size_t j = 0; j < np; ++j) A[static_cast<size_t>(n)][j] = 1.0;
  b[static_cast<size_t>(n)] = 1.0;
  std::vector<double> c(np + nw, 0.0);
  for (size_t j = 0; j < nw; ++j) c[np + j] = 1.0;
  auto r = solve_lp(A, b, c);
  if (!r.ok()) throw std::logic_error("dist_lp_polyhedral: LP failed");
  return std::max(r.value, 0.0);
}

// projected gradient on simplex weights for Euclidean distance to conv(piece)
double dist_euclid_polytope(const Vec& x, const std::vector<Vec>& piece) {
  const size_t m = piece.size();
  std::vector<double> lam(m, 1.0 / static_cast<double>(m));
  auto project_simplex = [](std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    int rho = 0;
    for (size_t i = 0; i < u.size(); ++i) {
      css += u[i];
      double t = (css - 1.0) / static_cast<double>(i + 1);
      if (u[i] - t > 0) {
        rho = static_cast<int>(i + 1);
        theta = t;
      }
    }
    for (auto& vi : v) vi = std::max(vi - theta, 0.0);
    return v;
  };
  auto combo = [&](const std::vector<double>& l) {
    Vec y = Vec::zero(x.dim());
    for (size_t j = 0; j < m; ++j) y = y + l[j] * piece[j];
    return y;
  };
  double lip = 0.0;
  for (const auto& p : piece) lip = std::max(lip, dot(p, p));
  double step = 1.0 / std::max(lip * static_cast<double>(m), 1e-12);
  for (int it = 0; it < 2000; ++it) {
    Vec res = combo(lam) - x;
    std::vector<double> g(m);
    for (size_t j = 0; j < m; ++j) g[j] = 2.0 * dot(res, piece[j]);
    std::vector<double> next(m);
    for (size_t j = 0; j < m; ++j) next[j] = lam[j] - step * g[j];
    next = project_simplex(std::move(next));
    double moved = 0.0;
    for (size_t j = 0; j < m; ++j) moved += std::abs(next[j] - lam[j]);
    lam = std::move(next);
    if (moved < 1e-14) break;
  }
  return norm_l2(combo(lam) - x);
}

}  // namespace

double dist_to_convex(const NormedSpace& s, const Vec& x, const std::vector<Vec>& piece) {
  if (piece.empty()) throw std::invalid_argument("dist_to_convex: empty piece");
  if (piece.size() == 1) return s.norm(x - piece[0]);
  if (piece.size() == 2) return dist_to_segment(s, x, piece[0], piece[1]);
  if (s.is_polyhedral() && !s.poly().facets.empty()) return dist_lp_polyhedral(s, x, piece);
  if (s.dim() == 2) {
    auto hull = convex_hull_2d(piece);
    if (hull.size() >= 3 && point_in_polygon(hull, x)) return 0.0;
    double best = kInf;
    const int n = static_cast<int>(hull.size());
    for (int i = 0; i < n; ++i)
      best = std::min(best,
                      dist_to_segment(s, x, hull[static_cast<size_t>(i)],
                                      hull[static_cast<size_t>((i + 1) % n)]));
    return best;
  }
  if (const auto* lp = std::get_if<LpFamily>(&s.family()); lp && lp->p == 2.0)
    return dist_euclid_polytope(x, piece);
  throw std::invalid_argument(
      "dist_to_convex: polytope targets in dim > 2 need a polyhedral or Euclidean norm");
}

SetDistance distance_to_set(const NormedSpace& s, const Vec& x, const FaceSet& S) {
  if (S.empty()) throw std::invalid_argument("distance_to_set: empty set");
  SetDistance out;
  out.value = kInf;
  for (const auto& piece : S.pieces) out.value = std::min(out.value, dist_to_convex(s, x, piece));
  for (const auto& p : S.cloud) out.value = std::min(out.value, s.norm(x - p));
  if (!S.cloud.empty()) out.mesh_error = S.mesh;
  return out;
}

HausdorffResult hausdorff_directed(const NormedSpace& s, const FaceSet& from, const FaceSet& to) {
  if (from.empty() || to.empty()) throw std::invalid_argument("hausdorff: empty set");
  const bool to_convex = to.cloud.empty() && to.pieces.size() == 1;

  std::vector<Vec> cands = from.sample_points();
  double refine_mesh = 0.0;
  if (!to_convex) {
    // d(., union) is not convex, so vertex evaluation alone can miss the sup;
    // subdivide piece edges and track the residual resolution.
    constexpr int kSub = 32;
    for (const auto& piece : from.pieces) {
      for (size_t i = 0; i < piece.size(); ++i)
        for (size_t j = i + 1; j < piece.size(); ++j) {
          for (int k = 1; k < kSub; ++k) {
            double t = static_cast<double>(k) / kSub;
            cands.push_back(piece[i] + t * (piece[j] - piece[i]));
          }
          refine_mesh = std::max(refine_mesh, s.norm(piece[j] - piece[i]) / kSub);
        }
    }
  }

  HausdorffResult r;
  for (const auto& c : cands) {
    auto d = distance_to_set(s, c, to);
    r.value = std::max(r.value, d.value);
    r.mesh_error = std::max(r.mesh_error, d.mesh_error);
  }
  r.mesh_error = std::max({r.mesh_error, from.cloud.empty() ? 0.0 : from.mesh, refine_mesh});
  r.exact = (r.mesh_error == 0.0);
  return r;
}

HausdorffResult hausdorff(const NormedSpace& s, const FaceSet& A, const FaceSet& B) {
  auto ab = hausdorff_directed(s, A, B);
  auto ba = hausdorff_directed(s, B, A);
  HausdorffResult r;
  r.value = std::max(ab.value, ba.value);
  r.mesh_error = std::max(ab.mesh_error, ba.mesh_error);
  r.exact = ab.exact && ba.exact;
  return r;
}

}  // namespace normlab
