#include "normlab/faces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normlab/hull.hpp"
#include "normlab/rng.hpp"

namespace normlab {

namespace {

void require_dual_unit(const NormedSpace& s, const Functional& f) {
  if (std::abs(s.dual_norm(f) - 1.0) > 100 * s.tol())
    throw std::invalid_argument("functional is not on the dual sphere");
}

void require_on_sphere(const NormedSpace& s, const Vec& x) {
  if (!s.on_sphere(x, 100 * s.tol()))
    throw std::invalid_argument("point is not on the unit sphere");
}

Vec dir2(double theta) { return Vec{std::cos(theta), std::sin(theta)}; }

Vec sphere2(const NormedSpace& s, double theta) { return s.normalize(dir2(theta)); }

// Boundary window { theta : h(theta) >= 0 } around theta0 with h(theta0) > 0.
// Returns (lo, hi); covers the whole circle when no sign change is found.
template <typename H>
std::pair<double, double> boundary_window(H&& h, double theta0) {
  auto bisect = [&](double good, double bad) {
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (good + bad);
      (h(mid) >= 0 ? good : bad) = mid;
    }
    return good;
  };
  const double step = M_PI / 512.0;
  double hi = theta0 + M_PI, lo = theta0 - M_PI;
  bool closed_hi = false, closed_lo = false;
  for (int k = 1; k <= 512; ++k) {
    double t = theta0 + k * step;
    if (h(t) < 0) {
      hi = bisect(t - step, t);
      closed_hi = true;
      break;
    }
  }
  for (int k = 1; k <= 512; ++k) {
    double t = theta0 - k * step;
    if (h(t) < 0) {
      lo = bisect(t + step, t);
      closed_lo = true;
      break;
    }
  }
  if (!closed_hi || !closed_lo) return {theta0 - M_PI, theta0 + M_PI};
  return {lo, hi};
}

std::vector<Vec> clip_ball(const NormedSpace& s, const Functional& f, double rhs) {
  const auto& view = s.poly();
  if (s.dim() == 2) return clip_polygon(view.vertices, f, rhs);
  if (s.dim() == 3) return clip_polytope_3d(view.vertices, view.edges, f, rhs);
  throw std::invalid_argument("exact ball clipping needs dim <= 3");
}

std::vector<std::vector<Vec>> dedupe_pieces(std::vector<std::vector<Vec>> pieces) {
  auto key = [](std::vector<Vec> p) {
    std::sort(p.begin(), p.end(), lex_less);
    return p;
  };
  std::vector<std::vector<Vec>> out;
  std::vector<std::vector<Vec>> keys;
  for (auto& p : pieces) {
    auto k = key(p);
    bool dup = false;
    for (const auto& seen : keys) {
      if (seen.size() != k.size()) continue;
      bool same = true;
      for (size_t i = 0; i < k.size() && same; ++i)
        same = norm_linf(seen[i] - k[i]) <= 1e-10;
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      keys.push_back(k);
      out.push_back(std::move(p));
    }
  }
  return out;
}

// uniform-ish ball point: sphere direction scaled by u^(1/dim)
Vec ball_point(const NormedSpace& s, RngStream& rs) {
  Vec dir = rs.gaussian_vec(s.dim());
  while (norm_l2(dir) < 1e-9) dir = rs.gaussian_vec(s.dim());
  double u = rs.uniform01();
  return std::pow(u, 1.0 / s.dim()) * s.normalize(dir);
}

double cloud_mesh_estimate(const NormedSpace& s, size_t count) {
  if (count == 0) return 1.0;
  return 2.0 * std::pow(1.0 / static_cast<double>(count), 1.0 / s.dim());
}

}  // namespace

FaceSet exposed_face(const NormedSpace& s, const Functional& f) {
  if (f.dim() != s.dim()) throw std::invalid_argument("exposed_face: dimension mismatch");
  require_dual_unit(s, f);

  if (s.is_polyhedral()) {
    const auto& V = s.poly().vertices;
    double best = -kInf;
    for (const auto& v : V) best = std::max(best, f(v));
    std::vector<Vec> face;
    for (const auto& v : V)
      if (f(v) >= best - 1e-10) face.push_back(v);
    FaceSet out = FaceSet::polytope(std::move(face));
    out.exposing = f;
    return out;
  }

  if (const auto* st = std::get_if<StadiumFamily>(&s.family())) {
    if (std::abs(f[0]) <= 1e-12) {
      double sy = f[1] < 0 ? -1.0 : 1.0;
      FaceSet out = FaceSet::polytope({Vec{-st->c, sy * st->r}, Vec{st->c, sy * st->r}});
      out.exposing = f;
      return out;
    }
  }

  FaceSet out = FaceSet::singleton(s.support_point(f));
  out.exposing = f;
  return out;
}

FunctionalSet duality_map(const NormedSpace& s, const Vec& x) {
  if (x.dim() != s.dim()) throw std::invalid_argument("duality_map: dimension mismatch");
  require_on_sphere(s, x);

  FunctionalSet out;
  if (s.is_polyhedral()) {
    const auto& facets = s.poly().facets;
    if (facets.empty())
      throw std::invalid_argument("duality_map: V-polytope above dim 3 unsupported");
    for (const auto& a : facets)
      if (a(x) >= 1.0 - 1e-9) out.extreme.push_back(a);
  } else if (const auto* lens = std::get_if<LensFamily>(&s.family())) {
    for (double cx : {lens->d, -lens->d}) {
      Vec c{cx, 0.0};
      if (std::abs(dist_l2(x, c) - lens->R) <= 1e-9) {
        Vec n = (1.0 / lens->R) * (x - c);
        out.extreme.push_back(Functional{(1.0 / dot(n, x)) * n});
      }
    }
  } else if (std::holds_alternative<OneTwoMixFamily>(s.family())) {
    std::vector<int> zeros;
    for (int i = 0; i < s.dim(); ++i)
      if (x[i] == 0.0) zeros.push_back(i);
    if (zeros.size() > 12) throw std::invalid_argument("duality_map: too many zero coordinates");
    double a = norm_l1(x), nx = s.norm(x);
    for (uint64_t mask = 0; mask < (1ULL << zeros.size()); ++mask) {
      Vec f = Vec::zero(s.dim());
      for (int i = 0; i < s.dim(); ++i) {
        double sgn;
        if (x[i] != 0.0) {
          sgn = x[i] < 0 ? -1.0 : 1.0;
        } else {
          size_t zi = static_cast<size_t>(std::find(zeros.begin(), zeros.end(), i) - zeros.begin());
          sgn = (mask >> zi) & 1 ? 1.0 : -1.0;
        }
        f[i] = (a * sgn + x[i]) / nx;
      }
      out.extreme.push_back(Functional{f});
    }
  } else {
    out.extreme.push_back(s.subgradient(x));
  }

  std::sort(out.extreme.begin(), out.extreme.end(),
            [](const Functional& a, const Functional& b) { return lex_less(a.as_vec(), b.as_vec()); });
  out.extreme.erase(std::unique(out.extreme.begin(), out.extreme.end(),
                                [](const Functional& a, const Functional& b) {
                                  return norm_linf(a.as_vec() - b.as_vec()) <= 1e-12;
                                }),
                    out.extreme.end());
  if (out.extreme.empty()) throw std::logic_error("duality_map: empty (should be impossible)");
  return out;
}

FaceSet a0_set(const NormedSpace& s, const Vec& x) {
  FunctionalSet J = duality_map(s, x);
  std::vector<std::vector<Vec>> pieces;
  for (const auto& g : J.extreme) {
    FaceSet face = exposed_face(s, g);
    for (auto& p : face.pieces) pieces.push_back(std::move(p));
  }
  return FaceSet::union_of(dedupe_pieces(std::move(pieces)));
}

RegionSample slice_region(const NormedSpace& s, const Functional& f, double delta, int count,
                          uint64_t seed) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("slice_region: delta in [0,1]");
  require_dual_unit(s, f);
  if (count < 1) throw std::invalid_argument("slice_region: count >= 1");

  FaceSet face = exposed_face(s, f);
  RegionSample r;
  r.defining = "slice(delta=" + std::to_string(delta) + ")";

  if (delta == 0.0) {
    r.points = face.sample_points();
    r.exact_pieces = face.pieces;
    r.mesh = 0.0;
    return r;
  }

  const double rhs = 1.0 - delta;
  if (s.is_polyhedral() && s.dim() <= 3) {
    auto piece = clip_ball(s, f, rhs);
    for (const auto& v : piece) r.points.push_back(v);
    r.exact_pieces.push_back(std::move(piece));
  } else if (s.dim() == 2) {
    // exact chord endpoints
    Vec anchor = face.sample_points().front();
    double theta0 = std::atan2(anchor[1], anchor[0]);
    auto h = [&](double t) { return f(sphere2(s, t)) - rhs; };
    auto [lo, hi] = boundary_window(h, theta0);
    if (hi - lo < 2 * M_PI - 1e-9) {
      r.points.push_back(sphere2(s, lo));
      r.points.push_back(sphere2(s, hi));
    }
  }

  for (const auto& p : face.sample_points()) r.points.push_back(p);

  // half anchored at the face, half rejection from the ball
  const auto face_pts = face.sample_points();
  int accepted = 0, attempts = 0;
  RngStream rs(seed, "slice_region");
  while (accepted < count && attempts < 100 * count) {
    ++attempts;
    Vec y = Vec::zero(s.dim());
    if (attempts % 2 == 0) {
      const Vec& w = face_pts[static_cast<size_t>(rs.uniform_int(static_cast<int>(face_pts.size())))];
      Vec b = ball_point(s, rs);
      double t = rs.uniform01() * std::min(delta / 2.0, 1.0);
      y = w + t * (b - w);
    } else {
      y = ball_point(s, rs);
    }
    if (f(y) >= rhs - s.tol()) {
      r.points.push_back(y);
      ++accepted;
    }
  }
  r.mesh = r.exact_pieces.empty() ? cloud_mesh_estimate(s, r.points.size()) * delta : 0.0;
  return r;
}

RegionSample d_region(const NormedSpace& s, const Vec& x, double delta, int count, uint64_t seed) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("d_region: delta in [0,1]");
  require_on_sphere(s, x);
  if (count < 1) throw std::invalid_argument("d_region: count >= 1");

  FaceSet a0 = a0_set(s, x);
  RegionSample r;
  r.defining = "D[x,delta=" + std::to_string(delta) + "]";

  if (delta == 0.0) {
    r.points = a0.sample_points();
    r.exact_pieces = a0.pieces;
    return r;
  }

  if (s.is_polyhedral() && s.dim() <= 3) {
    std::vector<std::vector<Vec>> pieces;
    for (const auto& a : s.poly().facets) {
      double rhs = 2.0 * (1.0 - delta) - a(x);
      if (rhs > 1.0 + 1e-12) continue;  // empty piece
      auto piece = clip_ball(s, a, rhs);
      if (!piece.empty()) pieces.push_back(std::move(piece));
    }
    r.exact_pieces = dedupe_pieces(std::move(pieces));
    for (const auto& p : r.exact_pieces)
      for (const auto& v : p) r.points.push_back(v);
  }

  const auto anchor_pts = a0.sample_points();
  for (const auto& p : anchor_pts) r.points.push_back(p);

  int accepted = 0, attempts = 0;
  RngStream rs(seed, "d_region");
  while (accepted < count && attempts < 100 * count) {
    ++attempts;
    Vec y = Vec::zero(s.dim());
    if (attempts % 2 == 0) {  // anchored near A0 (mixture weight 0.5)
      const Vec& w =
          anchor_pts[static_cast<size_t>(rs.uniform_int(static_cast<int>(anchor_pts.size())))];
      Vec b = ball_point(s, rs);
      double t = rs.uniform01() * std::min(delta, 1.0);
      y = w + t * (b - w);
    } else {
      y = ball_point(s, rs);
    }
    if (s.norm(0.5 * (x + y)) >= 1.0 - delta - s.tol()) {
      r.points.push_back(y);
      ++accepted;
    }
  }
  r.mesh = r.exact_pieces.empty() ? cloud_mesh_estimate(s, r.points.size()) * std::sqrt(delta) : 0.0;
  return r;
}

RegionSample c_region(const NormedSpace& s, const Vec& x, double delta, int count, uint64_t seed) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("c_region: delta in [0,1]");
  require_on_sphere(s, x);

  FaceSet a0 = a0_set(s, x);
  RegionSample r;
  r.defining = "C[x,delta=" + std::to_string(delta) + "]";
  r.points = a0.sample_points();
  if (delta == 0.0) {
    r.exact_pieces = a0.pieces;
    return r;
  }
  int accepted = 0, attempts = 0;
  RngStream rs(seed, "c_region");
  while (accepted < count && attempts < 200 * count) {
    ++attempts;
    Vec dir = rs.gaussian_vec(s.dim());
    while (norm_l2(dir) < 1e-9) dir = rs.gaussian_vec(s.dim());
    Vec y = s.normalize(dir);
    if (s.norm(0.5 * (x + y)) >= 1.0 - delta - s.tol()) {
      r.points.push_back(y);
      ++accepted;
    }
  }
  r.mesh = cloud_mesh_estimate(s, r.points.size()) * std::sqrt(delta);
  return r;
}

Verdict face_coincidence(const NormedSpace& s, const Vec& x) {
  Verdict v;
  v.property = "face-coincidence";
  FunctionalSet J = duality_map(s, x);
  v.stats = {{"extreme_functionals", J.extreme.size()}};

  if (J.extreme.size() <= 1) {
    v.status = Verdict::Status::holds_exact;
    v.stats["note"] = "duality map is a singleton";
    return v;
  }

  std::vector<FaceSet> faces;
  for (const auto& g : J.extreme) faces.push_back(exposed_face(s, g));

  double worst = 0.0;
  size_t wi = 0, wj = 0;
  bool exact = true;
  for (size_t i = 0; i < faces.size(); ++i)
    for (size_t j = i + 1; j < faces.size(); ++j) {
      auto h = hausdorff(s, faces[i], faces[j]);
      exact = exact && h.exact;
      if (h.value > worst) {
        worst = h.value;
        wi = i;
        wj = j;
      }
    }
  v.stats["worst_margin"] = worst;

  if (worst <= s.tol()) {
    v.status = exact ? Verdict::Status::holds_exact : Verdict::Status::holds_numerical;
    return v;
  }
  v.status = Verdict::Status::fails;
  v.certificate = {{"x", x.data()},
                   {"f", J.extreme[wi].as_vec().data()},
                   {"g", J.extreme[wj].as_vec().data()},
                   {"distance", worst}};
  return v;
}

double slice_face_hausdorff(const NormedSpace& s, const Functional& f, double delta) {
  require_dual_unit(s, f);
  if (delta <= 0.0) return 0.0;

  FaceSet face = exposed_face(s, f);
  const double rhs = 1.0 - delta;

  if (s.is_polyhedral() && s.dim() <= 3) {
    auto clip = clip_ball(s, f, rhs);
    double worst = 0.0;
    for (const auto& v : clip) worst = std::max(worst, dist_to_convex(s, v, face.pieces[0]));
    return worst;
  }

  if (const auto* lp = std::get_if<LpFamily>(&s.family()); lp && lp->p == 2.0)
    return std::sqrt(2.0 * delta);  // cap rim to pole chord length

  if (s.dim() == 2) {
    Vec anchor = face.sample_points().front();
    double theta0 = std::atan2(anchor[1], anchor[0]);
    auto h = [&](double t) { return f(sphere2(s, t)) - rhs; };
    auto [lo, hi] = boundary_window(h, theta0);
    auto dist_to_face = [&](const Vec& y) {
      double best = kInf;
      for (const auto& p : face.pieces) best = std::min(best, dist_to_convex(s, y, p));
      return best;
    };
    double worst = 0.0;
    // fixed global grid keeps the measured values nonincreasing in delta
    const int K = 2048;
    for (int k = 0; k < K; ++k) {
      double t = -M_PI + 2.0 * M_PI * k / K;
      double tt = t;
      if (tt < lo - 1e-15) tt += 2.0 * M_PI;
      if (tt > lo - 1e-15 && tt < hi + 1e-15 && h(t) >= -1e-13)
        worst = std::max(worst, dist_to_face(sphere2(s, t)));
    }
    if (hi - lo < 2 * M_PI - 1e-9) {
      worst = std::max(worst, dist_to_face(sphere2(s, lo)));
      worst = std::max(worst, dist_to_face(sphere2(s, hi)));
    }
    return worst;
  }

  // sampled fallback (reported as numerical by the callers)
  double worst = 0.0;
  for (const auto& y : s.sphere_sample(20000, 0x51edULL)) {
    if (f(y) >= rhs - s.tol()) {
      double best = kInf;
      for (const auto& p : face.pieces) best = std::min(best, dist_to_convex(s, y, p));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

double dset_a0_hausdorff(const NormedSpace& s, const Vec& x, double delta) {
  require_on_sphere(s, x);
  if (delta <= 0.0) return 0.0;

  FaceSet a0 = a0_set(s, x);
  auto dist_to_a0 = [&](const Vec& y) { return distance_to_set(s, y, a0).value; };

  if (const auto* lp = std::get_if<LpFamily>(&s.family()); lp && lp->p == 2.0)
    return 2.0 * std::sqrt(std::max(2.0 * delta - delta * delta, 0.0));

  if (s.is_polyhedral() && s.dim() <= 3) {
    RegionSample reg = d_region(s, x, delta, 1, 1);  // exact pieces only
    FaceSet from;
    from.pieces = reg.exact_pieces;
    return hausdorff_directed(s, from, a0).value;
  }

  if (s.dim() == 2) {
    double theta_x = std::atan2(x[1], x[0]);
    double worst = 0.0;
    // sphere arc { y on sphere : ||(x+y)/2|| >= 1 - delta }
    {
      auto h = [&](double t) { return s.norm(0.5 * (x + sphere2(s, t))) - (1.0 - delta); };
      auto [lo, hi] = boundary_window(h, theta_x);
      const int K = 512;
      for (int k = 0; k <= K; ++k) {
        double t = lo + (hi - lo) * k / K;
        worst = std::max(worst, dist_to_a0(sphere2(s, t)));
      }
    }
    // level curve { y = 2(1-delta) z - x : z on sphere, ||y|| <= 1 }
    {
      auto y_of = [&](double t) { return 2.0 * (1.0 - delta) * sphere2(s, t) - x; };
      auto h = [&](double t) { return 1.0 - s.norm(y_of(t)); };
      if (h(theta_x) >= 0) {
        auto [lo, hi] = boundary_window(h, theta_x);
        const int K = 512;
        for (int k = 0; k <= K; ++k) {
          double t = lo + (hi - lo) * k / K;
          Vec y = y_of(t);
          if (s.norm(y) <= 1.0 + 1e-12) worst = std::max(worst, dist_to_a0(y));
        }
      }
    }
    return worst;
  }

  // sampled fallback
  double worst = 0.0;
  for (const auto& y : s.sphere_sample(20000, 0xd5e7ULL))
    if (s.norm(0.5 * (x + y)) >= 1.0 - delta - s.tol())
      worst = std::max(worst, dist_to_a0(y));
  return worst;
}

}  // namespace normlab
