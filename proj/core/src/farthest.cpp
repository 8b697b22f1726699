#include "normlab/farthest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "normlab/hull.hpp"
#include "normlab/properties.hpp"
#include "normlab/rng.hpp"

namespace normlab {

namespace {

Vec centroid(const PointSet& K) {
  Vec c = Vec::zero(K.points.front().dim());
  for (const auto& p : K.points) c = c + p;
  return (1.0 / static_cast<double>(K.points.size())) * c;
}

double diameter(const NormedSpace& s, const PointSet& K) {
  double d = 0.0;
  for (size_t i = 0; i < K.points.size(); ++i)
    for (size_t j = i + 1; j < K.points.size(); ++j)
      d = std::max(d, s.norm(K.points[i] - K.points[j]));
  return d;
}

void push_unique(std::vector<Vec>& out, const Vec& p) {
  for (const auto& q : out)
    if (norm_linf(p - q) <= 1e-9) return;
  out.push_back(p);
}

// Normal-cone queries: for every hull vertex v a query far out along the
// negated cone bisector makes v the strict farthest point (Euclidean).
std::vector<Vec> exposure_queries_euclid(const PointSet& K, int dim) {
  std::vector<Vec> queries;
  Vec c = centroid(K);

  auto make_query = [&](const Vec& v, Vec u) {
    double ul = norm_l2(u);
    if (ul < 1e-12) return;
    u = (1.0 / ul) * u;
    // smallest R with ||q - v|| > ||q - k|| for all k, q = c - R u
    double R = 0.0;
    bool ok = true;
    for (const auto& k : K.points) {
      if (norm_linf(k - v) <= 1e-12) continue;
      double den = 2.0 * dot(u, v - k);
      double num = 2.0 * dot(c, v - k) + dot(k, k) - dot(v, v);
      if (den <= 1e-12) {
        ok = false;
        break;
      }
      R = std::max(R, num / den);
    }
    if (ok) queries.push_back(c - (1.5 * R + 1.0 + norm_l2(v - c)) * u);
  };

  if (dim == 2) {
    auto hull = convex_hull_2d(K.points);
    const int n = static_cast<int>(hull.size());
    if (n < 3) {
      for (const auto& v : hull) make_query(v, v - c);
      return queries;
    }
    for (int i = 0; i < n; ++i) {
      const Vec& prev = hull[static_cast<size_t>((i + n - 1) % n)];
      const Vec& v = hull[static_cast<size_t>(i)];
      const Vec& next = hull[static_cast<size_t>((i + 1) % n)];
      // outward normals of the two incident edges of a CCW polygon
      Vec n1{v[1] - prev[1], prev[0] - v[0]};
      Vec n2{next[1] - v[1], v[0] - next[0]};
      Vec u = (1.0 / std::max(norm_l2(n1), 1e-300)) * n1 +
              (1.0 / std::max(norm_l2(n2), 1e-300)) * n2;
      make_query(v, u);
    }
    return queries;
  }

  // dim 3
  Hull3 h = convex_hull_3d(K.points);
  for (size_t vi = 0; vi < h.vertices.size(); ++vi) {
    Vec u = Vec::zero(3);
    for (const auto& f : h.faces) {
      if (f[0] != static_cast<int>(vi) && f[1] != static_cast<int>(vi) &&
          f[2] != static_cast<int>(vi))
        continue;
      const Vec& p = h.vertices[static_cast<size_t>(f[0])];
      const Vec& q = h.vertices[static_cast<size_t>(f[1])];
      const Vec& r = h.vertices[static_cast<size_t>(f[2])];
      Vec e1 = q - p, e2 = r - p;
      Vec nf{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
             e1[0] * e2[1] - e1[1] * e2[0]};
      double l = norm_l2(nf);
      if (l > 1e-12) u = u + (1.0 / l) * nf;
    }
    make_query(h.vertices[vi], u);
  }
  return queries;
}

}  // namespace

double farthest_distance(const NormedSpace& s, const Vec& x, const PointSet& K) {
  if (K.points.empty()) throw std::invalid_argument("farthest_distance: empty set");
  double m = 0.0;
  for (const auto& k : K.points) m = std::max(m, s.norm(x - k));
  return m;
}

FarthestReport farthest_points(const NormedSpace& s, const Vec& x, const PointSet& K,
                               double tie_tol) {
  if (K.points.empty()) throw std::invalid_argument("farthest_points: empty set");
  FarthestReport rep;
  rep.query = x;
  rep.far_distance = farthest_distance(s, x, K);
  for (const auto& k : K.points)
    if (s.norm(x - k) >= rep.far_distance - tie_tol) rep.attaining.push_back(k);
  rep.unique = rep.attaining.size() == 1;
  return rep;
}

std::vector<Vec> far_set(const NormedSpace& s, const PointSet& K, int query_samples,
                         uint64_t seed, double tie_tol) {
  if (query_samples < 1) throw std::invalid_argument("far_set: need at least one query");
  Vec c = centroid(K);
  double diam = std::max(diameter(s, K), 1e-12);

  std::vector<Vec> queries;
  for (int i = 0; i < query_samples; ++i) {
    RngStream rs(seed, "far_queries", static_cast<uint64_t>(i));
    Vec dir = rs.gaussian_vec(s.dim());
    while (norm_l2(dir) < 1e-9) dir = rs.gaussian_vec(s.dim());
    double r = 3.0 * diam * std::pow(rs.uniform01(), 1.0 / s.dim());
    queries.push_back(c + r * s.normalize(dir));
  }
  for (const auto& k : K.points) {  // rays through each point, both ways
    Vec u = k - c;
    if (norm_l2(u) < 1e-12) continue;
    for (double t : {1.5, 3.0, 6.0, -1.5, -3.0, -6.0}) queries.push_back(c + t * u);
  }
  const bool euclid =
      std::holds_alternative<LpFamily>(s.family()) && std::get<LpFamily>(s.family()).p == 2.0;
  if (euclid && (s.dim() == 2 || s.dim() == 3) && K.points.size() >= s.dim() + 1u) {
    for (const auto& q : exposure_queries_euclid(K, s.dim())) queries.push_back(q);
  }

  std::vector<Vec> far;
  for (const auto& q : queries)
    for (const auto& p : farthest_points(s, q, K, tie_tol).attaining) push_unique(far, p);
  return far;
}

DensityReport density_experiment(const NormedSpace& s, const PointSet& K,
                                 const ProbeConfig& cfg) {
  if (K.points.empty()) throw std::invalid_argument("density_experiment: empty set");
  DensityReport rep;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.hlur_warning = !check_hlur(s, cfg).holds();

  Vec c = centroid(K);
  double diam = std::max(diameter(s, K), 1e-12);
  const double side = 4.0 * diam;

  int unique = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    RngStream rs(cfg.seed, "density_queries", static_cast<uint64_t>(i));
    Vec q = c;
    for (int j = 0; j < s.dim(); ++j) q[j] += side * (rs.uniform01() - 0.5);
    if (farthest_points(s, q, K, 1e-6).unique) ++unique;
  }
  rep.unique_fraction = static_cast<double>(unique) / static_cast<double>(cfg.samples);
  return rep;
}

Verdict hull_equality_check(const NormedSpace& s, const PointSet& K, const ProbeConfig& cfg) {
  Verdict v;
  v.property = "hull-equality";
  const bool euclid =
      std::holds_alternative<LpFamily>(s.family()) && std::get<LpFamily>(s.family()).p == 2.0;
  if (!euclid || (s.dim() != 2 && s.dim() != 3))
    throw std::invalid_argument("hull_equality_check: needs a Euclidean space of dim 2 or 3");
  if (K.points.size() < static_cast<size_t>(s.dim()) + 1)
    throw std::invalid_argument("hull_equality_check: too few points");

  std::vector<Vec> hull_vertices;
  if (s.dim() == 2) {
    hull_vertices = convex_hull_2d(K.points);
  } else {
    hull_vertices = convex_hull_3d(K.points).vertices;
  }

  auto far = far_set(s, K, std::max(64, cfg.samples / 100), cfg.seed);

  auto contains = [](const std::vector<Vec>& set, const Vec& p) {
    for (const auto& q : set)
      if (norm_linf(p - q) <= 1e-9) return true;
    return false;
  };

  std::vector<Vec> missing_from_far, extra_in_far;
  for (const auto& h : hull_vertices)
    if (!contains(far, h)) missing_from_far.push_back(h);
  for (const auto& f : far)
    if (!contains(hull_vertices, f)) extra_in_far.push_back(f);

  v.stats = {{"seed", cfg.seed},
             {"hull_vertices", hull_vertices.size()},
             {"far_points", far.size()}};

  if (missing_from_far.empty() && extra_in_far.empty()) {
    v.status = Verdict::Status::holds_exact;
    return v;
  }
  v.status = Verdict::Status::fails;
  nlohmann::json mf = nlohmann::json::array(), ef = nlohmann::json::array();
  for (const auto& p : missing_from_far) mf.push_back(p.data());
  for (const auto& p : extra_in_far) ef.push_back(p.data());
  v.certificate = {{"hull_vertices_not_in_far", mf}, {"far_points_not_hull_vertices", ef}};
  return v;
}

}  // namespace normlab
