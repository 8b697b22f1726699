#include "normlab/daugavet.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "normlab/faces.hpp"
#include "normlab/rng.hpp"

namespace normlab {

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
      throw std::invalid_argument("OperatorMatrix: ragged rows");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

OperatorMatrix OperatorMatrix::rank_one(const Functional& f, const Vec& y) {
  if (f.dim() != y.dim()) throw std::invalid_argument("rank_one: dimension mismatch");
  OperatorMatrix m(y.dim());
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) m.at(i, j) = y[i] * f[j];
  return m;
}

Vec OperatorMatrix::apply(const Vec& x) const {
  if (x.dim() != n) throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
  Vec y = Vec::zero(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

OperatorMatrix OperatorMatrix::plus_identity() const {
  OperatorMatrix m = *this;
  for (int i = 0; i < n; ++i) m.at(i, i) += 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::scaled(double s) const {
  OperatorMatrix m = *this;
  for (auto& v : m.a) v *= s;
  return m;
}

OperatorMatrix OperatorMatrix::times(const OperatorMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("OperatorMatrix::times: dimension mismatch");
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double v = at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < n; ++j) m.at(i, j) += v * o.at(k, j);
    }
  return m;
}

namespace {

bool is_zero(const OperatorMatrix& T) {
  for (double v : T.a)
    if (v != 0.0) return false;
  return true;
}

double golden_max_1d(const std::function<double(double)>& g, double lo, double hi) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 90; ++it) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = g(x2);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

OpNormResult operator_norm(const NormedSpace& s, const OperatorMatrix& T, const ProbeConfig& cfg,
                           const std::vector<Vec>& hints) {
  if (T.n != s.dim()) throw std::invalid_argument("operator_norm: dimension mismatch");
  OpNormResult r;
  if (is_zero(T)) {
    r.value = 0.0;
    r.argmax = Vec::zero(s.dim());
    return r;
  }

  if (const auto* lp = std::get_if<LpFamily>(&s.family())) {
    if (lp->p == 1.0) {  // max column abs sum
      int best = 0;
      double m = -1.0;
      for (int j = 0; j < T.n; ++j) {
        double c = 0.0;
        for (int i = 0; i < T.n; ++i) c += std::abs(T.at(i, j));
        if (c > m) {
          m = c;
          best = j;
        }
      }
      r.value = m;
      r.argmax = Vec::zero(T.n);
      r.argmax[best] = 1.0;
      return r;
    }
    if (lp->p == kInf) {  // max row abs sum
      int best = 0;
      double m = -1.0;
      for (int i = 0; i < T.n; ++i) {
        double c = 0.0;
        for (int j = 0; j < T.n; ++j) c += std::abs(T.at(i, j));
        if (c > m) {
          m = c;
          best = i;
        }
      }
      r.value = m;
      r.argmax = Vec::zero(T.n);
      for (int j = 0; j < T.n; ++j) r.argmax[j] = T.at(best, j) < 0 ? -1.0 : 1.0;
      return r;
    }
    if (lp->p == 2.0) {  // largest singular value
      Eigen::MatrixXd M(T.n, T.n);
      for (int i = 0; i < T.n; ++i)
        for (int j = 0; j < T.n; ++j) M(i, j) = T.at(i, j);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
      r.value = svd.singularValues()(0);
      Eigen::VectorXd v = svd.matrixV().col(0);
      std::vector<double> c(static_cast<size_t>(T.n));
      for (int i = 0; i < T.n; ++i) c[static_cast<size_t>(i)] = v(i);
      r.argmax = Vec(std::move(c));
      return r;
    }
  }

  auto ratio = [&](const Vec& x) { return s.norm(T.apply(x)) / s.norm(x); };

  if (s.is_polyhedral()) {  // convex maximum is attained at a ball vertex
    const auto& V = s.poly().vertices;
    double m = -1.0;
    for (const auto& v : V) {
      double c = s.norm(T.apply(v));
      if (c > m) {
        m = c;
        r.argmax = v;
      }
    }
    r.value = m;
    return r;
  }

  double best = -1.0;
  Vec bestx;
  for (const auto& h : hints) {
    if (norm_linf(h) == 0.0) continue;
    double c = ratio(h);
    if (c > best) {
      best = c;
      bestx = h;
    }
  }

  if (s.dim() == 2) {
    const int K = 1024;
    int besti = 0;
    double bestg = -1.0;
    auto g = [&](double t) { return ratio(Vec{std::cos(t), std::sin(t)}); };
    for (int k = 0; k < K; ++k) {
      double v = g(M_PI * k / K);  // antipodal symmetry: half turn suffices
      if (v > bestg) {
        bestg = v;
        besti = k;
      }
    }
    double lo = M_PI * (besti - 1) / K, hi = M_PI * (besti + 1) / K;
    double refined = golden_max_1d(g, lo, hi);
    if (refined > best) {
      best = refined;
      // recover the argmax angle by a short re-scan
      double bt = lo;
      for (int k = 0; k <= 64; ++k) {
        double t = lo + (hi - lo) * k / 64.0;
        if (g(t) >= best - 1e-13) {
          bt = t;
          break;
        }
      }
      bestx = Vec{std::cos(bt), std::sin(bt)};
    }
    r.value = best;
    r.argmax = s.normalize(bestx);
    r.exact = false;  // scan lower bound (tight in practice)
    return r;
  }

  // multistart pattern search
  for (int start = 0; start < 64; ++start) {
    RngStream rs(0x5eedULL, "opnorm", static_cast<uint64_t>(start));
    Vec x = rs.gaussian_vec(s.dim());
    while (norm_l2(x) < 1e-9) x = rs.gaussian_vec(s.dim());
    x = s.normalize(x);
    double fx = ratio(x);
    double step = 0.5;
    while (step > 1e-10) {
      bool improved = false;
      for (int i = 0; i < s.dim() && !improved; ++i) {
        for (double sgn : {1.0, -1.0}) {
          Vec y = x;
          y[i] += sgn * step;
          if (norm_linf(y) == 0.0) continue;
          y = s.normalize(y);
          double fy = ratio(y);
          if (fy > fx + 1e-15) {
            x = y;
            fx = fy;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (fx > best) {
      best = fx;
      bestx = x;
    }
  }
  r.value = best;
  r.argmax = bestx;
  r.exact = false;
  return r;
}

double daugavet_residual(const NormedSpace& s, const OperatorMatrix& T, const ProbeConfig& cfg,
                         const std::vector<Vec>& hints) {
  auto nT = operator_norm(s, T, cfg, hints);
  auto nIT = operator_norm(s, T.plus_identity(), cfg, hints);
  return 1.0 + nT.value - nIT.value;
}

namespace {

// scan directions for the residual objective r(x) = ||Tx - l x|| / ||x||
struct ScanBest {
  double value = kInf;
  Vec dir;
};

ScanBest scan_residual(const NormedSpace& s, const OperatorMatrix& T, double lambda, long grid) {
  auto obj = [&](const Vec& d) {
    Vec y = T.apply(d);
    for (int i = 0; i < d.dim(); ++i) y[i] -= lambda * d[i];
    return s.norm(y) / s.norm(d);
  };
  ScanBest best;
  if (s.dim() == 2) {
    for (long k = 0; k < grid; ++k) {
      double t = M_PI * static_cast<double>(k) / static_cast<double>(grid);
      Vec d{std::cos(t), std::sin(t)};
      double v = obj(d);
      if (v < best.value) {
        best.value = v;
        best.dir = d;
      }
    }
    return best;
  }
  if (s.dim() == 3) {
    long nphi = std::max<long>(8, static_cast<long>(std::sqrt(static_cast<double>(grid) / 2.0)));
    long nth = 2 * nphi;
    for (long i = 0; i <= nphi; ++i) {
      double phi = M_PI / 2.0 * static_cast<double>(i) / static_cast<double>(nphi);
      for (long j = 0; j < nth; ++j) {
        double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(nth);
        Vec d{std::sin(phi) * std::cos(th), std::sin(phi) * std::sin(th), std::cos(phi)};
        double v = obj(d);
        if (v < best.value) {
          best.value = v;
          best.dir = d;
        }
      }
    }
    return best;
  }
  // higher dims: seeded random directions
  for (long k = 0; k < grid; ++k) {
    RngStream rs(0xacedULL, "eigen_scan", static_cast<uint64_t>(k));
    Vec d = rs.gaussian_vec(s.dim());
    while (norm_l2(d) < 1e-9) d = rs.gaussian_vec(s.dim());
    double v = obj(d);
    if (v < best.value) {
      best.value = v;
      best.dir = d;
    }
  }
  return best;
}

}  // namespace

double eigen_residual_grid_oracle(const NormedSpace& s, const OperatorMatrix& T, double lambda,
                                  long grid) {
  return scan_residual(s, T, lambda, grid).value;
}

EigenResidual approx_eigen_residual(const NormedSpace& s, const OperatorMatrix& T, double lambda,
                                    const ProbeConfig& cfg, long grid, double op_norm_hint) {
  if (T.n != s.dim()) throw std::invalid_argument("approx_eigen_residual: dimension mismatch");
  auto obj = [&](const Vec& d) {
    Vec y = T.apply(d);
    for (int i = 0; i < d.dim(); ++i) y[i] -= lambda * d[i];
    return s.norm(y) / s.norm(d);
  };

  EigenResidual out;
  out.lipschitz =
      (op_norm_hint >= 0.0 ? op_norm_hint : operator_norm(s, T, cfg).value) + std::abs(lambda);

  ScanBest best = scan_residual(s, T, lambda, grid);
  out.grid_mesh = s.dim() == 2 ? M_PI / static_cast<double>(grid) : 0.0;

  if (s.dim() == 2) {
    double t0 = std::atan2(best.dir[1], best.dir[0]);
    double step = M_PI / static_cast<double>(grid);
    auto g = [&](double t) { return obj(Vec{std::cos(t), std::sin(t)}); };
    constexpr double invphi = 0.6180339887498949;
    double a = t0 - step, b = t0 + step;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 90; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = g(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = g(x2);
      }
    }
    double t = f1 < f2 ? x1 : x2;
    best.value = std::min(best.value, std::min(f1, f2));
    best.dir = Vec{std::cos(t), std::sin(t)};
  } else if (s.dim() >= 3) {
    // local pattern refinement from the best grid direction
    Vec x = best.dir;
    double fx = best.value;
    double step = 0.1;
    while (step > 1e-12) {
      bool improved = false;
      for (int i = 0; i < s.dim() && !improved; ++i)
        for (double sgn : {1.0, -1.0}) {
          Vec y = x;
          y[i] += sgn * step;
          if (norm_linf(y) == 0.0) continue;
          double fy = obj(y);
          if (fy < fx - 1e-16) {
            x = y;
            fx = fy;
            improved = true;
            break;
          }
        }
      if (!improved) step *= 0.5;
    }
    best.value = fx;
    best.dir = x;
  }

  out.value = best.value;
  out.witness = s.normalize(best.dir);
  return out;
}

std::vector<double> real_eigenvalues(const OperatorMatrix& T) {
  Eigen::MatrixXd M(T.n, T.n);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) M(i, j) = T.at(i, j);
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<double> out;
  double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  for (int i = 0; i < T.n; ++i) {
    auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) <= 1e-9 * scale) out.push_back(ev.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumReport spectrum_report(const NormedSpace& s, const OperatorMatrix& T,
                               const ProbeConfig& cfg) {
  SpectrumReport rep;
  auto on = operator_norm(s, T, cfg);
  rep.op_norm = on.value;
  rep.op_norm_exact = on.exact;
  rep.daugavet_residual = daugavet_residual(s, T, cfg, {on.argmax});
  auto er = approx_eigen_residual(s, T, rep.op_norm, cfg, 100000, rep.op_norm);
  rep.eigen_residual_at_norm = er.value;
  rep.witness = er.witness;
  return rep;
}

Verdict anti_daugavet_probe(const NormedSpace& s, const ProbeConfig& cfg) {
  Verdict v;
  v.property = "anti-daugavet";
  constexpr double kFailThreshold = 0.1;  // far above scan error

  struct Candidate {
    OperatorMatrix T;
    std::vector<Vec> hints;
    const char* kind;
  };
  std::vector<Candidate> cands;

  for (double sc : {0.5, 1.0, 2.0})
    cands.push_back({OperatorMatrix::identity(s.dim()).scaled(sc), {}, "scaled-identity"});

  // norming rank-ones s * (f x y), f in J(y): always satisfy the equation
  const int n_rank_one = std::clamp(cfg.samples / 10, 200, 5000);
  {
    auto ys = s.sphere_sample(n_rank_one, cfg.seed ^ 0x9a5f1ULL);
    RngStream rs(cfg.seed, "adv_scale");
    for (const auto& y : ys) {
      Functional f = s.subgradient(y);
      double sc = rs.uniform(0.0, 5.0);
      if (sc <= 1e-3) sc = 1.0;
      Candidate c{OperatorMatrix::rank_one(f, y).scaled(sc), {y, s.support_point(f)}, "rank-one"};
      cands.push_back(std::move(c));
    }
  }

  // tangent shears g x u with g in J(x0), u in A0(x0), g(u) < 1: these are
  // Daugavet-satisfying but have no eigenvector at the norm when g(u) < 1
  if (s.is_polyhedral() && !s.poly().facets.empty()) {
    const auto& view = s.poly();
    std::vector<Vec> pool = view.vertices;
    for (const auto& [i, j] : view.edges)
      pool.push_back(0.5 * (view.vertices[static_cast<size_t>(i)] +
                            view.vertices[static_cast<size_t>(j)]));
    int added = 0;
    for (const auto& x0 : pool) {
      if (added >= 200) break;
      auto J = duality_map(s, x0);
      FaceSet a0 = a0_set(s, x0);
      std::vector<Vec> us;
      for (const auto& piece : a0.pieces) {
        for (const auto& p : piece) us.push_back(p);
        for (size_t i = 0; i + 1 < piece.size(); ++i)
          us.push_back(0.5 * (piece[i] + piece[i + 1]));
      }
      for (const auto& g : J.extreme)
        for (const auto& u : us) {
          if (g(u) < 1.0 - 0.01 && added < 200) {
            cands.push_back(
                {OperatorMatrix::rank_one(g, u), {x0, u, s.support_point(g)}, "tangent-shear"});
            ++added;
          }
        }
    }
  }

  // random operators kept only when they already satisfy the equation
  {
    RngStream rs(cfg.seed, "adv_random");
    for (int t = 0; t < 50; ++t) {
      OperatorMatrix T(s.dim());
      for (auto& e : T.a) e = rs.gaussian();
      if (std::abs(daugavet_residual(s, T, cfg)) <= cfg.tol)
        cands.push_back({T, {}, "random-filtered"});
    }
  }

  int evaluated = 0, skipped = 0;
  double worst = 0.0;
  for (const auto& c : cands) {
    auto on = operator_norm(s, c.T, cfg, c.hints);
    std::vector<Vec> hints = c.hints;
    hints.push_back(on.argmax);
    double daug = daugavet_residual(s, c.T, cfg, hints);
    if (daug > 10 * cfg.tol) {  // not a Daugavet operator after all
      ++skipped;
      continue;
    }
    ++evaluated;
    auto er = approx_eigen_residual(s, c.T, on.value, cfg, 4096, on.value);
    worst = std::max(worst, er.value);
    if (er.value >= kFailThreshold) {
      v.status = Verdict::Status::fails;
      v.certificate = {{"kind", c.kind},
                       {"matrix", c.T.a},
                       {"op_norm", on.value},
                       {"daugavet_residual", daug},
                       {"eigen_residual", er.value},
                       {"witness", er.witness.data()}};
      v.stats = {{"seed", cfg.seed},
                 {"candidates_evaluated", evaluated},
                 {"candidates_skipped", skipped},
                 {"threshold", kFailThreshold}};
      return v;
    }
  }

  v.status = Verdict::Status::holds_numerical;
  v.stats = {{"seed", cfg.seed},
             {"candidates_evaluated", evaluated},
             {"candidates_skipped", skipped},
             {"worst_eigen_residual", worst},
             {"threshold", kFailThreshold}};
  return v;
}

}  // namespace normlab
