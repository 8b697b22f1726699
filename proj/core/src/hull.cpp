#include "normlab/hull.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace normlab {

namespace {

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Vec> dedupe_points(std::vector<Vec> pts, double tol) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out)
      if (norm_linf(p - q) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<Vec> convex_hull_2d(std::vector<Vec> pts, double tol) {
  if (pts.empty()) return {};
  std::sort(pts.begin(), pts.end(),
            [](const Vec& a, const Vec& b) { return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [tol](const Vec& a, const Vec& b) {
                          return std::abs(a[0] - b[0]) <= tol && std::abs(a[1] - b[1]) <= tol;
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;

  std::vector<Vec> h(2 * static_cast<size_t>(n));
  int k = 0;
  for (int i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {  // upper
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  h.resize(static_cast<size_t>(k - 1));
  return h;  // CCW
}

std::vector<Functional> polygon_facets_offset1(const std::vector<Vec>& hull) {
  const int n = static_cast<int>(hull.size());
  if (n < 3) throw std::invalid_argument("polygon_facets_offset1: need a 2D polygon");
  std::vector<Functional> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec& p = hull[static_cast<size_t>(i)];
    const Vec& q = hull[static_cast<size_t>((i + 1) % n)];
    // outward normal of CCW edge p->q
    double nx = q[1] - p[1];
    double ny = p[0] - q[0];
    double off = nx * p[0] + ny * p[1];
    if (std::abs(off) < 1e-14)
      throw std::invalid_argument("polygon_facets_offset1: origin on an edge");
    out.push_back(Functional{{nx / off, ny / off}});
  }
  return out;
}

std::vector<Vec> clip_polygon(const std::vector<Vec>& poly, const Functional& f, double rhs) {
  std::vector<Vec> out;
  const int n = static_cast<int>(poly.size());
  if (n == 0) return out;
  for (int i = 0; i < n; ++i) {
    const Vec& a = poly[static_cast<size_t>(i)];
    const Vec& b = poly[static_cast<size_t>((i + 1) % n)];
    double fa = f(a) - rhs, fb = f(b) - rhs;
    if (fa >= 0) out.push_back(a);
    if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
      double t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
    }
  }
  return dedupe_points(std::move(out), 1e-12);
}

bool point_in_polygon(const std::vector<Vec>& poly, const Vec& p, double tol) {
  const int n = static_cast<int>(poly.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    if (cross2(poly[static_cast<size_t>(i)], poly[static_cast<size_t>((i + 1) % n)], p) < -tol)
      return false;
  }
  return true;
}

Hull3 convex_hull_3d(const std::vector<Vec>& pts_in, double tol) {
  std::vector<Vec> pts = dedupe_points(pts_in, 1e-12);
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw std::invalid_argument("convex_hull_3d: need at least 4 distinct points");

  // Supporting planes from point triples; <n,x> <= off over the whole set.
  struct Plane {
    Vec nrm;
    double off;
  };
  std::vector<Plane> planes;
  std::vector<std::array<int, 3>> tris;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec nrm = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        double len = norm_l2(nrm);
        if (len < tol) continue;
        nrm = (1.0 / len) * nrm;
        double off = dot(nrm, pts[i]);
        int above = 0, below = 0;
        for (int t = 0; t < n && (!above || !below); ++t) {
          double d = dot(nrm, pts[t]) - off;
          if (d > tol) ++above;
          else if (d < -tol) ++below;
        }
        if (above && below) continue;
        std::array<int, 3> f = {i, j, k};
        if (above) {  // flip so the normal points outward
          std::swap(f[1], f[2]);
          nrm = -1.0 * nrm;
          off = -off;
        }
        tris.push_back(f);
        bool dup = false;
        for (const auto& p : planes)
          if (norm_linf(p.nrm - nrm) <= 1e-9 && std::abs(p.off - off) <= 1e-9) {
            dup = true;
            break;
          }
        if (!dup) planes.push_back({nrm, off});
      }
  if (tris.empty()) throw std::invalid_argument("convex_hull_3d: degenerate (flat) input");

  // A point is a vertex iff its active supporting planes have rank 3.
  auto is_vertex = [&](int idx) {
    std::vector<Vec> basis;
    for (const auto& p : planes) {
      if (std::abs(dot(p.nrm, pts[static_cast<size_t>(idx)]) - p.off) > 1e-8) continue;
      Vec r = p.nrm;
      for (const auto& b : basis) r = r - dot(r, b) * b;
      double len = norm_l2(r);
      if (len > 1e-7) {
        basis.push_back((1.0 / len) * r);
        if (basis.size() == 3) return true;
      }
    }
    return false;
  };

  Hull3 h;
  std::vector<int> remap(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (is_vertex(i)) {
      remap[static_cast<size_t>(i)] = static_cast<int>(h.vertices.size());
      h.vertices.push_back(pts[static_cast<size_t>(i)]);
    }
  }

  std::set<std::array<int, 3>> seen;
  for (const auto& t : tris) {
    std::array<int, 3> m = {remap[static_cast<size_t>(t[0])], remap[static_cast<size_t>(t[1])],
                            remap[static_cast<size_t>(t[2])]};
    if (m[0] < 0 || m[1] < 0 || m[2] < 0) continue;
    std::array<int, 3> key = m;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) h.faces.push_back(m);
  }
  return h;
}

std::vector<Functional> hull3_facets_offset1(const Hull3& h, double tol) {
  std::vector<Functional> out;
  for (const auto& f : h.faces) {
    const Vec& p = h.vertices[static_cast<size_t>(f[0])];
    const Vec& q = h.vertices[static_cast<size_t>(f[1])];
    const Vec& r = h.vertices[static_cast<size_t>(f[2])];
    Vec nrm = cross3(q - p, r - p);
    double off = dot(nrm, p);
    if (std::abs(off) < 1e-13)
      throw std::invalid_argument("hull3_facets_offset1: origin on a facet plane");
    Functional a{(1.0 / off) * nrm};
    bool dup = false;
    for (const auto& b : out)
      if (norm_linf(a.as_vec() - b.as_vec()) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<int, int>> hull3_edges(const Hull3& h, double tol) {
  auto facets = hull3_facets_offset1(h, tol);
  const int nv = static_cast<int>(h.vertices.size());
  auto on_facet = [&](int fi, int vi) {
    return std::abs(facets[static_cast<size_t>(fi)](h.vertices[static_cast<size_t>(vi)]) - 1.0) <=
           1e-8;
  };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      int shared = 0;
      for (int fi = 0; fi < static_cast<int>(facets.size()) && shared < 2; ++fi)
        if (on_facet(fi, i) && on_facet(fi, j)) ++shared;
      if (shared >= 2) edges.emplace_back(i, j);
    }
  return edges;
}

std::vector<Vec> clip_polytope_3d(const std::vector<Vec>& vertices,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const Functional& f, double rhs) {
  std::vector<Vec> out;
  for (const auto& v : vertices)
    if (f(v) >= rhs - 1e-12) out.push_back(v);
  for (const auto& [i, j] : edges) {
    const Vec& a = vertices[static_cast<size_t>(i)];
    const Vec& b = vertices[static_cast<size_t>(j)];
    double fa = f(a) - rhs, fb = f(b) - rhs;
    if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
      double t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
    }
  }
  return dedupe_points(std::move(out), 1e-12);
}

}  // namespace normlab
