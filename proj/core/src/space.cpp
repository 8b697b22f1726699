#include "normlab/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normlab/hull.hpp"
#include "normlab/lp.hpp"
#include "normlab/rng.hpp"

namespace normlab {

namespace {

constexpr int kMaxSignVectorDim = 12;  // 2^12 vertices is the enumeration cap

double sign_nonzero(double v) { return v < 0 ? -1.0 : 1.0; }

std::vector<Vec> sign_vectors(int dim) {
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(1) << dim);
  for (uint64_t mask = 0; mask < (static_cast<uint64_t>(1) << dim); ++mask) {
    Vec v = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? -1.0 : 1.0;
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> unit_vectors_pm(int dim) {
  std::vector<Vec> out;
  for (int i = 0; i < dim; ++i) {
    Vec v = Vec::zero(dim);
    v[i] = 1.0;
    out.push_back(v);
    v[i] = -1.0;
    out.push_back(v);
  }
  return out;
}

double lens_gauge(const Vec& x, double d, double R) {
  double n2 = dot(x, x);
  if (n2 == 0.0) return 0.0;
  double denom = R * R - d * d;
  double best = 0.0;
  for (double cx : {d, -d}) {
    double xc = x[0] * cx;
    double t = (-xc + std::sqrt(xc * xc + denom * n2)) / denom;
    best = std::max(best, t);
  }
  return best;
}

double stadium_gauge(const Vec& x, double c, double r) {
  double ax = std::abs(x[0]);
  double n2 = norm_l2(x);
  if (n2 == 0.0) return 0.0;
  auto phi = [&](double t) {
    double dx = std::max(ax - t * c, 0.0);
    return std::hypot(dx, x[1]) - t * r;
  };
  double lo = 0.0, hi = n2 / r;  // phi(hi) <= 0 since d(x, t*seg) <= |x|_2
  for (int it = 0; it < 64; ++it) {
    double mid = 0.5 * (lo + hi);
    (phi(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double mix_norm(const Vec& x) {
  double a = norm_l1(x), b2 = dot(x, x);
  return std::sqrt(a * a + b2);
}

// Support point of f for the mix norm. The optimality system reduces to the
// soft threshold x_i = sign(f_i) * max(|f_i| - rho, 0) where rho solves
// sum_i max(|f_i| - rho, 0) = rho; that equation is piecewise linear, so the
// root is exact.
Vec mix_support_raw(const Functional& f) {
  const int n = f.dim();
  std::vector<double> b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = std::abs(f[i]);
  std::vector<double> s = b;
  std::sort(s.begin(), s.end());
  double total = 0.0;
  for (double v : s) total += v;
  // scan intervals [s_k, s_{k+1}); above-threshold sum A_k and count m_k
  double below = 0.0;
  double rho = 0.0;
  for (int k = 0; k <= n; ++k) {
    double lo = (k == 0) ? 0.0 : s[static_cast<size_t>(k - 1)];
    double hi = (k == n) ? kInf : s[static_cast<size_t>(k)];
    double above_sum = total - below;
    int m = n - k;
    double cand = above_sum / (m + 1);
    if (cand >= lo - 1e-15 && cand <= hi + 1e-15) {
      rho = cand;
      break;
    }
    if (k < n) below += s[static_cast<size_t>(k)];
  }
  Vec x = Vec::zero(n);
  for (int i = 0; i < n; ++i)
    x[i] = sign_nonzero(f[i]) * std::max(std::abs(f[i]) - rho, 0.0);
  return x;
}

}  // namespace

double holder_conjugate(double p) {
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

double lp_norm(const Vec& x, double p) {
  if (p == kInf) return norm_linf(x);
  if (p == 1.0) return norm_l1(x);
  if (p == 2.0) return norm_l2(x);
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += std::pow(std::abs(x[i]), p);
  return std::pow(s, 1.0 / p);
}

NormedSpace::NormedSpace(int dim, NormFamily family, double tol)
    : dim_(dim), family_(std::move(family)), tol_(tol) {
  validate();
  build_polyhedral_view();
}

void NormedSpace::validate() const {
  if (dim_ < 1) throw std::invalid_argument("NormedSpace: dim must be positive");
  if (tol_ <= 0) throw std::invalid_argument("NormedSpace: tol must be positive");

  auto require_symmetric = [&](const std::vector<Vec>& pts, const char* what) {
    for (const auto& v : pts) {
      if (v.dim() != dim_) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
      bool found = false;
      for (const auto& w : pts)
        if (norm_linf(v + w) <= 1e-9) {
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument(std::string(what) + ": list is not symmetric");
    }
  };

  if (const auto* lp = std::get_if<LpFamily>(&family_)) {
    if (!(lp->p >= 1.0)) throw std::invalid_argument("LpFamily: p must be in [1, inf]");
  } else if (const auto* pv = std::get_if<PolytopeVFamily>(&family_)) {
    if (pv->vertices.size() < 2) throw std::invalid_argument("PolytopeV: too few vertices");
    require_symmetric(pv->vertices, "PolytopeV");
  } else if (const auto* ph = std::get_if<PolytopeHFamily>(&family_)) {
    if (dim_ > 3)
      throw std::invalid_argument("PolytopeH: facet dualization is supported up to dim 3");
    std::vector<Vec> pts;
    for (const auto& f : ph->facets) pts.push_back(f.as_vec());
    require_symmetric(pts, "PolytopeH");
  } else if (const auto* lens = std::get_if<LensFamily>(&family_)) {
    if (dim_ != 2) throw std::invalid_argument("Lens: dim must be 2");
    if (!(lens->R > lens->d && lens->d > 0))
      throw std::invalid_argument("Lens: need R > d > 0");
  } else if (const auto* st = std::get_if<StadiumFamily>(&family_)) {
    if (dim_ != 2) throw std::invalid_argument("Stadium: dim must be 2");
    if (!(st->c > 0 && st->r > 0)) throw std::invalid_argument("Stadium: need c, r > 0");
  }
}

void NormedSpace::build_polyhedral_view() {
  std::vector<Vec> raw;
  std::vector<Functional> analytic_facets;

  if (const auto* lp = std::get_if<LpFamily>(&family_)) {
    if (lp->p == 1.0) {
      raw = unit_vectors_pm(dim_);
      if (dim_ <= kMaxSignVectorDim)
        for (const auto& s : sign_vectors(dim_)) analytic_facets.push_back(Functional{s});
    } else if (lp->p == kInf) {
      if (dim_ > kMaxSignVectorDim) return;  // norm still closed form; no combinatorics
      raw = sign_vectors(dim_);
      for (const auto& e : unit_vectors_pm(dim_)) analytic_facets.push_back(Functional{e});
    } else {
      return;  // smooth lp: not polyhedral
    }
  } else if (const auto* pv = std::get_if<PolytopeVFamily>(&family_)) {
    raw = pv->vertices;
  } else if (const auto* ph = std::get_if<PolytopeHFamily>(&family_)) {
    std::vector<Vec> fpts;
    for (const auto& f : ph->facets) fpts.push_back(f.as_vec());
    if (dim_ == 2) {
      auto hullF = convex_hull_2d(fpts);
      if (hullF.size() < 3 || !point_in_polygon(hullF, Vec::zero(2), -1e-9))
        throw std::invalid_argument("PolytopeH: facets do not bound a ball (origin not interior)");
      for (const auto& a : polygon_facets_offset1(hullF)) raw.push_back(a.as_vec());
    } else if (dim_ == 3) {
      auto hF = convex_hull_3d(fpts);
      for (const auto& a : hull3_facets_offset1(hF)) raw.push_back(a.as_vec());
    } else {
      throw std::invalid_argument("PolytopeH: dim > 3 unsupported");
    }
  } else {
    return;  // smooth/rotund families are not polyhedral
  }

  PolyhedralView view;
  if (dim_ == 2) {
    view.vertices = convex_hull_2d(raw);
    if (view.vertices.size() < 3)
      throw std::invalid_argument("polytope ball is degenerate (vertices do not span)");
    if (!point_in_polygon(view.vertices, Vec::zero(2), -1e-9))
      throw std::invalid_argument("polytope ball: origin not interior");
    view.facets = polygon_facets_offset1(view.vertices);
    const int n = static_cast<int>(view.vertices.size());
    for (int i = 0; i < n; ++i) view.edges.emplace_back(i, (i + 1) % n);
  } else if (dim_ == 3) {
    Hull3 h = convex_hull_3d(raw);
    view.vertices = h.vertices;
    view.facets = hull3_facets_offset1(h);
    view.edges = hull3_edges(h);
    for (const auto& a : view.facets)
      if (a(Vec::zero(3)) >= 1.0)
        throw std::invalid_argument("polytope ball: origin not interior");
  } else {
    // V-representation only; the gauge goes through an LP.
    view.vertices = raw;
    view.facets = analytic_facets;
  }
  poly_ = std::move(view);
}

std::string NormedSpace::family_kind() const {
  if (std::holds_alternative<LpFamily>(family_)) return "lp";
  if (std::holds_alternative<PolytopeVFamily>(family_)) return "polytope_v";
  if (std::holds_alternative<PolytopeHFamily>(family_)) return "polytope_h";
  if (std::holds_alternative<OneTwoMixFamily>(family_)) return "one_two_mix";
  if (std::holds_alternative<LensFamily>(family_)) return "lens";
  return "stadium";
}

const PolyhedralView& NormedSpace::poly() const {
  if (!poly_) throw std::logic_error("NormedSpace::poly: family is not polyhedral");
  return *poly_;
}

double NormedSpace::norm(const Vec& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("norm: dimension mismatch");

  if (const auto* lp = std::get_if<LpFamily>(&family_)) return lp_norm(x, lp->p);
  if (std::holds_alternative<OneTwoMixFamily>(family_)) return mix_norm(x);
  if (const auto* lens = std::get_if<LensFamily>(&family_)) return lens_gauge(x, lens->d, lens->R);
  if (const auto* st = std::get_if<StadiumFamily>(&family_)) return stadium_gauge(x, st->c, st->r);

  // polytope families
  const auto& view = poly();
  if (!view.facets.empty()) {
    double m = 0.0;
    for (const auto& a : view.facets) m = std::max(m, a(x));
    return m;
  }
  // V-only: gauge by LP  min sum(mu)  s.t.  W mu = x, mu >= 0
  if (norm_linf(x) == 0.0) return 0.0;
  const auto& W = view.vertices;
  std::vector<std::vector<double>> A(static_cast<size_t>(dim_),
                                     std::vector<double>(W.size(), 0.0));
  std::vector<double> b(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    b[static_cast<size_t>(i)] = x[i];
    for (size_t j = 0; j < W.size(); ++j) A[static_cast<size_t>(i)][j] = W[j][i];
  }
  auto r = solve_lp(A, b, std::vector<double>(W.size(), 1.0));
  if (!r.ok()) throw std::invalid_argument("norm: vertices do not span the space");
  return r.value;
}

double NormedSpace::dual_norm(const Functional& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("dual_norm: dimension mismatch");

  if (const auto* lp = std::get_if<LpFamily>(&family_))
    return lp_norm(f.as_vec(), holder_conjugate(lp->p));
  if (poly_) {
    double m = 0.0;
    for (const auto& v : poly_->vertices) m = std::max(m, f(v));
    return m;
  }
  if (norm_linf(f.as_vec()) == 0.0) return 0.0;
  return f(support_point(f));
}

Vec NormedSpace::support_point(const Functional& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("support_point: dimension mismatch");
  if (norm_linf(f.as_vec()) == 0.0)
    throw std::invalid_argument("support_point: zero functional");

  if (const auto* lp = std::get_if<LpFamily>(&family_)) {
    if (lp->p == kInf) {
      Vec x = Vec::zero(dim_);
      for (int i = 0; i < dim_; ++i) x[i] = sign_nonzero(f[i]);
      return x;
    }
    if (lp->p == 1.0) {
      int best = 0;
      for (int i = 1; i < dim_; ++i)
        if (std::abs(f[i]) > std::abs(f[best])) best = i;
      Vec x = Vec::zero(dim_);
      x[best] = sign_nonzero(f[best]);
      return x;
    }
    double q = holder_conjugate(lp->p);
    Vec x = Vec::zero(dim_);
    for (int i = 0; i < dim_; ++i)
      x[i] = sign_nonzero(f[i]) * std::pow(std::abs(f[i]), q - 1.0);
    return normalize(x);
  }

  if (poly_) {
    const auto& V = poly_->vertices;
    int best = 0;
    for (int i = 1; i < static_cast<int>(V.size()); ++i) {
      double d = f(V[static_cast<size_t>(i)]) - f(V[static_cast<size_t>(best)]);
      if (d > 1e-15 || (std::abs(d) <= 1e-15 && lex_less(V[static_cast<size_t>(i)], V[static_cast<size_t>(best)])))
        best = i;
    }
    return V[static_cast<size_t>(best)];
  }

  if (const auto* lens = std::get_if<LensFamily>(&family_)) {
    double fl = norm_l2(f.as_vec());
    Vec fhat{f[0] / fl, f[1] / fl};
    for (double cx : {lens->d, -lens->d}) {
      Vec p{cx + lens->R * fhat[0], lens->R * fhat[1]};
      Vec other{-cx, 0.0};
      if (dist_l2(p, other) <= lens->R + 1e-12) return p;
    }
    double h = std::sqrt(lens->R * lens->R - lens->d * lens->d);
    return Vec{0.0, sign_nonzero(f[1]) * h};
  }

  if (const auto* st = std::get_if<StadiumFamily>(&family_)) {
    if (f[0] == 0.0) return Vec{-st->c, sign_nonzero(f[1]) * st->r};
    double fl = norm_l2(f.as_vec());
    return Vec{sign_nonzero(f[0]) * st->c + st->r * f[0] / fl, st->r * f[1] / fl};
  }

  // one_two_mix
  return normalize(mix_support_raw(f));
}

Functional NormedSpace::subgradient(const Vec& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("subgradient: dimension mismatch");
  double nx = norm(x);
  if (nx == 0.0) throw std::invalid_argument("subgradient: x = 0");

  if (const auto* lp = std::get_if<LpFamily>(&family_)) {
    if (lp->p == 1.0) {
      Vec f = Vec::zero(dim_);
      for (int i = 0; i < dim_; ++i) f[i] = x[i] == 0.0 ? -1.0 : sign_nonzero(x[i]);
      return Functional{f};
    }
    if (lp->p == kInf) {
      // extreme support functionals are sign(x_i) e_i over the active set;
      // the lexicographically smallest one wins
      Functional best;
      bool have = false;
      for (int i = 0; i < dim_; ++i) {
        if (std::abs(std::abs(x[i]) - nx) <= nx * 1e-12) {
          Vec f = Vec::zero(dim_);
          f[i] = sign_nonzero(x[i]);
          if (!have || lex_less(f, best.as_vec())) {
            best = Functional{f};
            have = true;
          }
        }
      }
      return best;
    }
    Vec f = Vec::zero(dim_);
    double scale = std::pow(nx, lp->p - 1.0);
    for (int i = 0; i < dim_; ++i)
      f[i] = sign_nonzero(x[i]) * std::pow(std::abs(x[i]), lp->p - 1.0) / scale;
    return Functional{f};
  }

  if (poly_) {
    if (poly_->facets.empty())
      throw std::invalid_argument("subgradient: V-polytope above dim 3 unsupported");
    Functional best;
    bool have = false;
    for (const auto& a : poly_->facets) {
      if (std::abs(a(x) - nx) <= nx * 1e-10) {
        if (!have || lex_less(a.as_vec(), best.as_vec())) {
          best = a;
          have = true;
        }
      }
    }
    if (!have) throw std::logic_error("subgradient: no active facet found");
    return best;
  }

  if (const auto* lens = std::get_if<LensFamily>(&family_)) {
    Vec p = (1.0 / nx) * x;
    Functional best;
    bool have = false;
    for (double cx : {lens->d, -lens->d}) {
      Vec c{cx, 0.0};
      if (std::abs(dist_l2(p, c) - lens->R) <= 1e-9) {
        Vec n = (1.0 / lens->R) * (p - c);
        Functional f{(1.0 / dot(n, p)) * n};
        if (!have || lex_less(f.as_vec(), best.as_vec())) {
          best = f;
          have = true;
        }
      }
    }
    if (!have) throw std::logic_error("subgradient: lens point not on either arc");
    return best;
  }

  if (const auto* st = std::get_if<StadiumFamily>(&family_)) {
    Vec p = (1.0 / nx) * x;
    double u = std::clamp(p[0], -st->c, st->c);
    Vec q{u, 0.0};
    Vec n = (1.0 / dist_l2(p, q)) * (p - q);
    return Functional{(1.0 / dot(n, p)) * n};
  }

  // one_two_mix: d/dx sqrt(|x|_1^2 + |x|_2^2) = (|x|_1 s + x) / norm, with the
  // sign box resolved to -1 on zero coordinates (lex smallest extreme).
  Vec f = Vec::zero(dim_);
  double a = norm_l1(x);
  for (int i = 0; i < dim_; ++i) {
    double s = x[i] == 0.0 ? -1.0 : sign_nonzero(x[i]);
    f[i] = (a * s + x[i]) / nx;
  }
  return Functional{f};
}

std::vector<Vec> NormedSpace::sphere_sample(int count, uint64_t seed) const {
  if (count < 1) throw std::invalid_argument("sphere_sample: count must be >= 1");
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    RngStream rs(seed, "sphere_sample", static_cast<uint64_t>(i));
    Vec dir = rs.gaussian_vec(dim_);
    while (norm_l2(dir) < 1e-9) dir = rs.gaussian_vec(dim_);
    out.push_back(normalize(dir));
  }
  return out;
}

Vec NormedSpace::normalize(const Vec& x) const {
  double n = norm(x);
  if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
  return (1.0 / n) * x;
}

Functional NormedSpace::normalize_dual(const Functional& f) const {
  double n = dual_norm(f);
  if (n == 0.0) throw std::invalid_argument("normalize_dual: zero functional");
  return Functional{(1.0 / n) * f.as_vec()};
}

bool NormedSpace::on_sphere(const Vec& x, double slack) const {
  return std::abs(norm(x) - 1.0) <= (slack < 0 ? tol_ : slack);
}

}  // namespace normlab
