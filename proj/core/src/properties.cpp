#include "normlab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normlab/rng.hpp"

namespace normlab {

namespace {

Vec piece_midpoint(const Vec& a, const Vec& b) { return 0.5 * (a + b); }

// Candidate sphere points where smoothness/ACS can fail on a polytope:
// vertices plus true-edge midpoints (edge midpoints matter in dim 3, where
// edge-interior points still have a non-singleton duality map).
std::vector<Vec> polytope_probe_points(const NormedSpace& s) {
  const auto& view = s.poly();
  std::vector<Vec> pts = view.vertices;
  for (const auto& [i, j] : view.edges)
    pts.push_back(piece_midpoint(view.vertices[static_cast<size_t>(i)],
                                 view.vertices[static_cast<size_t>(j)]));
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return lex_less(b, a); });
  return pts;
}

}  // namespace

Verdict check_rotund(const NormedSpace& s, const ProbeConfig& cfg) {
  Verdict v;
  v.property = "rotund";
  v.stats = {{"seed", cfg.seed}};

  if (const auto* lp = std::get_if<LpFamily>(&s.family()); lp && lp->p > 1.0 && lp->p != kInf) {
    v.status = Verdict::Status::holds_exact;
    v.stats["note"] = "lp ball is strictly convex for 1 < p < inf";
    return v;
  }
  if (std::holds_alternative<LensFamily>(s.family())) {
    v.status = Verdict::Status::holds_exact;
    v.stats["note"] = "boundary consists of circular arcs";
    return v;
  }
  if (std::holds_alternative<OneTwoMixFamily>(s.family())) {
    v.status = Verdict::Status::holds_exact;
    v.stats["note"] = "strictly convex euclidean part dominates midpoints";
    return v;
  }
  if (const auto* st = std::get_if<StadiumFamily>(&s.family())) {
    Vec a{st->c, st->r}, b{-st->c, st->r};
    Functional f{{0.0, 1.0 / st->r}};
    v.status = Verdict::Status::fails;
    v.certificate = {{"x", a.data()},
                     {"y", b.data()},
                     {"functional", f.as_vec().data()},
                     {"face_diameter", s.norm(a - b)}};
    v.stats["note"] = "flat edge at x2 = r";
    return v;
  }

  // polytope families: a facet with two ball vertices is a flat face
  const auto& view = s.poly();
  for (const auto& a : view.facets) {
    std::vector<Vec> on_facet;
    for (const auto& w : view.vertices)
      if (std::abs(a(w) - 1.0) <= 1e-10) on_facet.push_back(w);
    if (on_facet.size() >= 2) {
      v.status = Verdict::Status::fails;
      v.certificate = {{"x", on_facet[0].data()},
                       {"y", on_facet[1].data()},
                       {"functional", a.as_vec().data()},
                       {"face_diameter", s.norm(on_facet[0] - on_facet[1])}};
      return v;
    }
  }
  v.status = Verdict::Status::holds_exact;  // unreachable for genuine polytopes
  v.stats["note"] = "no facet carries two vertices";
  return v;
}

Verdict check_smooth(const NormedSpace& s, const ProbeConfig& cfg) {
  Verdict v;
  v.property = "smooth";
  v.stats = {{"seed", cfg.seed}};

  if (const auto* lp = std::get_if<LpFamily>(&s.family()); lp && lp->p > 1.0 && lp->p != kInf) {
    v.status = Verdict::Status::holds_exact;
    v.stats["note"] = "lp norm is differentiable away from 0 for 1 < p < inf";
    return v;
  }
  if (std::holds_alternative<StadiumFamily>(s.family())) {
    v.status = Verdict::Status::holds_exact;
    v.stats["note"] = "arcs meet the flat edges tangentially (C1 boundary)";
    return v;
  }

  auto fail_at = [&](const Vec& x, const char* note) {
    auto J = duality_map(s, x);
    v.status = Verdict::Status::fails;
    v.certificate = {
        {"x", x.data()},
        {"f", J.extreme.front().as_vec().data()},
        {"g", J.extreme.back().as_vec().data()},
        {"dual_diameter",
         s.dual_norm(Functional{J.extreme.front().as_vec() - J.extreme.back().as_vec()})}};
    v.stats["note"] = note;
  };

  if (const auto* lens = std::get_if<LensFamily>(&s.family())) {
    double h = std::sqrt(lens->R * lens->R - lens->d * lens->d);
    fail_at(Vec{0.0, h}, "two circle normals meet at the corner");
    return v;
  }
  if (std::holds_alternative<OneTwoMixFamily>(s.family())) {
    Vec x = Vec::zero(s.dim());
    x[0] = 1.0;
    fail_at(s.normalize(x), "the l1 part is not differentiable on coordinate hyperplanes");
    return v;
  }

  for (const auto& x : polytope_probe_points(s)) {
    auto J = duality_map(s, x);
    if (J.extreme.size() >= 2) {
      fail_at(x, "polytope vertex with a dual face of positive diameter");
      return v;
    }
  }
  v.status = Verdict::Status::holds_exact;
  v.stats["note"] = "no probe point has multiple norming functionals";
  return v;
}

Verdict check_acs(const NormedSpace& s, const ProbeConfig& cfg) {
  Verdict v;
  v.property = "acs";
  v.stats = {{"seed", cfg.seed}};

  Verdict rot = check_rotund(s, cfg);
  if (rot.status == Verdict::Status::holds_exact) {
    v.status = Verdict::Status::holds_exact;
    v.stats["derived_from"] = "rotund";
    return v;
  }
  Verdict smo = check_smooth(s, cfg);
  if (smo.status == Verdict::Status::holds_exact) {
    v.status = Verdict::Status::holds_exact;
    v.stats["derived_from"] = "smooth";
    return v;
  }

  if (!s.is_polyhedral() || s.poly().facets.empty())
    throw std::logic_error("check_acs: unclassified non-polyhedral family");

  // Exhaustive over the face combinatorics: for every probe point x, every
  // extreme f of J(x) plus their barycenter, and every y in A0(x) (piece
  // vertices and midpoints), tangency must force f(y) = 1.
  long long tested = 0;
  for (const auto& x : polytope_probe_points(s)) {
    auto J = duality_map(s, x);
    std::vector<Functional> fs = J.extreme;
    if (J.extreme.size() > 1) {
      Vec bary = Vec::zero(s.dim());
      for (const auto& g : J.extreme) bary = bary + g.as_vec();
      fs.push_back(Functional{(1.0 / static_cast<double>(J.extreme.size())) * bary});
    }
    FaceSet a0 = a0_set(s, x);
    std::vector<Vec> ys;
    for (const auto& piece : a0.pieces) {
      for (const auto& p : piece) ys.push_back(p);
      for (size_t i = 0; i < piece.size(); ++i)
        for (size_t j = i + 1; j < piece.size(); ++j)
          ys.push_back(piece_midpoint(piece[i], piece[j]));
    }
    for (const auto& f : fs)
      for (const auto& y : ys) {
        ++tested;
        if (f(y) < 1.0 - cfg.tol) {
          v.status = Verdict::Status::fails;
          v.certificate = {{"x", x.data()},
                           {"y", y.data()},
                           {"f", f.as_vec().data()},
                           {"f_of_y", f(y)},
                           {"norm_x_plus_y", s.norm(x + y)}};
          v.stats["pairs_tested"] = tested;
          return v;
        }
      }
  }
  v.status = Verdict::Status::holds_exact;
  v.stats["pairs_tested"] = tested;
  v.stats["note"] = "exhaustive over vertices and edge midpoints";
  return v;
}

Verdict check_hlur(const NormedSpace& s, const ProbeConfig& cfg) {
  Verdict acs = check_acs(s, cfg);
  Verdict v;
  v.property = "hlur";
  v.status = acs.status;
  v.certificate = acs.certificate;
  v.stats = {{"seed", cfg.seed}, {"acs", status_name(acs.status)}, {"route", "acs"}};

  if (s.dim() <= 2) {
    Verdict rot = check_rotund(s, cfg);
    Verdict smo = check_smooth(s, cfg);
    bool route2 = rot.holds() || smo.holds();
    v.stats["rotund"] = status_name(rot.status);
    v.stats["smooth"] = status_name(smo.status);
    if (route2 != acs.holds()) {
      v.status = Verdict::Status::inconclusive;
      v.stats["note"] = "acs route and rotund-or-smooth route disagree";
      v.certificate = {{"acs", to_json(acs)}, {"rotund", to_json(rot)}, {"smooth", to_json(smo)}};
    }
  }
  return v;
}

Verdict check_hs_slices(const NormedSpace& s, const ProbeConfig& cfg) {
  cfg.validate();
  Verdict v;
  v.property = "hs-slices";

  const bool exact_path =
      (s.is_polyhedral() && s.dim() <= 3) ||
      (std::holds_alternative<LpFamily>(s.family()) && std::get<LpFamily>(s.family()).p == 2.0);
  const double mono_slack = exact_path ? 1e-12 : 1e-9;

  int functionals = std::max(1, std::min(cfg.samples, 512));
  double worst_final = 0.0, worst_violation = 0.0;
  std::vector<double> rate_constants;
  nlohmann::json bad;

  for (int i = 0; i < functionals; ++i) {
    RngStream rs(cfg.seed, "hs_slices_f", static_cast<uint64_t>(i));
    Vec dir = rs.gaussian_vec(s.dim());
    while (norm_l2(dir) < 1e-9) dir = rs.gaussian_vec(s.dim());
    Functional f = s.normalize_dual(Functional{dir});

    double prev = kInf, last_nonzero_delta = 0.0, last_nonzero_value = 0.0;
    for (double delta : cfg.delta_schedule) {
      double h = slice_face_hausdorff(s, f, delta);
      if (h > prev + mono_slack) {
        worst_violation = std::max(worst_violation, h - prev);
        bad = {{"f", f.as_vec().data()}, {"delta", delta}, {"value", h}, {"previous", prev}};
      }
      prev = h;
      if (delta > 0) {
        last_nonzero_delta = delta;
        last_nonzero_value = h;
      } else {
        worst_final = std::max(worst_final, h);
      }
    }
    if (last_nonzero_delta > 0) rate_constants.push_back(last_nonzero_value / last_nonzero_delta);
  }

  std::sort(rate_constants.begin(), rate_constants.end());
  v.stats = {{"seed", cfg.seed},
             {"functionals", functionals},
             {"worst_final", worst_final},
             {"worst_violation", worst_violation},
             {"rate_constant_median",
              rate_constants.empty() ? 0.0 : rate_constants[rate_constants.size() / 2]},
             {"rate_constant_worst", rate_constants.empty() ? 0.0 : rate_constants.back()}};

  if (worst_violation > 0 || worst_final > 10 * cfg.tol) {
    v.status = Verdict::Status::fails;
    v.certificate = bad.is_null() ? nlohmann::json{{"worst_final", worst_final}} : bad;
    return v;
  }
  v.status = exact_path ? Verdict::Status::holds_exact : Verdict::Status::holds_numerical;
  return v;
}

Verdict dset_convergence(const NormedSpace& s, const Vec& x, const ProbeConfig& cfg) {
  cfg.validate();
  Verdict v;
  v.property = "dset-convergence";

  Verdict hlur = check_hlur(s, cfg);
  Verdict face = face_coincidence(s, x);

  nlohmann::json table = nlohmann::json::array();
  double first = -1.0, final = 0.0, worst_violation = 0.0;
  double prev = kInf;
  for (double delta : cfg.delta_schedule) {
    if (delta == 0.0) continue;
    double h = dset_a0_hausdorff(s, x, delta);
    table.push_back({{"delta", delta}, {"hausdorff", h}});
    if (h > prev + 1e-9) worst_violation = std::max(worst_violation, h - prev);
    prev = h;
    if (first < 0) first = h;
    final = h;
  }
  bool converges =
      (final <= 0.15 * std::max(first, 1e-30) || final <= 10 * cfg.tol) && worst_violation == 0.0;

  v.stats = {{"seed", cfg.seed},
             {"x", x.data()},
             {"distances", table},
             {"first", first},
             {"final", final},
             {"monotonicity_violation", worst_violation},
             {"face_coincidence", status_name(face.status)},
             {"hlur", status_name(hlur.status)}};

  if (hlur.holds()) {
    if (converges && face.holds()) {
      v.status = (hlur.status == Verdict::Status::holds_exact &&
                  face.status == Verdict::Status::holds_exact)
                     ? Verdict::Status::holds_exact
                     : Verdict::Status::holds_numerical;
    } else {
      v.status = Verdict::Status::fails;  // would contradict the guaranteed direction
      v.certificate = {{"face_coincidence", to_json(face)},
                       {"final_distance", final},
                       {"monotonicity_violation", worst_violation}};
    }
  } else {
    v.status = Verdict::Status::holds_exact;  // the guaranteed direction is vacuous here
    v.stats["note"] = "space is not HLUR; only measurements are reported";
    if (!face.holds()) v.stats["face_certificate"] = face.certificate;
  }
  return v;
}

ProbeReport sequence_probe(const NormedSpace& s, const Vec& x, const std::string& kind,
                           const ProbeConfig& cfg, const Vec* constant_point) {
  if (!s.on_sphere(x, 100 * s.tol()))
    throw std::invalid_argument("sequence_probe: x must be on the sphere");
  if (kind != "face-walk" && kind != "random-tangent" && kind != "cap-shrink" &&
      kind != "constant")
    throw std::invalid_argument("sequence_probe: unknown generator '" + kind + "'");
  if (kind == "constant" && constant_point == nullptr)
    throw std::invalid_argument("sequence_probe: constant generator needs a point");

  auto J = duality_map(s, x);
  std::vector<Functional> probes = J.extreme;
  if (J.extreme.size() > 1) {  // the barycenter is a norming functional too
    Vec bary = Vec::zero(s.dim());
    for (const auto& g : J.extreme) bary = bary + g.as_vec();
    probes.push_back(Functional{(1.0 / static_cast<double>(J.extreme.size())) * bary});
  }
  std::vector<FaceSet> faces;
  for (const auto& g : probes) faces.push_back(exposed_face(s, g));

  const int steps = 32;
  auto cap_point = [&](double delta) {
    // boundary point of C[x, delta], pushed away from x
    if (s.dim() == 2) {
      double theta0 = std::atan2(x[1], x[0]);
      auto h = [&](double t) {
        return s.norm(0.5 * (x + s.normalize(Vec{std::cos(t), std::sin(t)}))) - (1.0 - delta);
      };
      double good = theta0, bad = theta0 + M_PI;
      bool bracketed = false;
      for (int k = 1; k <= 512; ++k) {
        double t = theta0 + M_PI * k / 512.0;
        if (h(t) < 0) {
          bad = t;
          bracketed = true;
          break;
        }
        good = t;
      }
      if (!bracketed) return s.normalize(Vec{-x[0], -x[1]});
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (good + bad);
        (h(mid) >= 0 ? good : bad) = mid;
      }
      return s.normalize(Vec{std::cos(good), std::sin(good)});
    }
    int k = 0;
    for (int i = 1; i < s.dim(); ++i)
      if (std::abs(x[i]) < std::abs(x[k])) k = i;
    Vec u = Vec::zero(s.dim());
    u[k] = 1.0;
    u = u - (dot(u, x) / dot(x, x)) * x;
    u = (1.0 / norm_l2(u)) * u;
    auto mid_norm = [&](double t) { return s.norm(0.5 * (x + s.normalize(x + t * u))); };
    double lo = 0.0, hi = 2.0;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      (mid_norm(mid) >= 1.0 - delta ? lo : hi) = mid;
    }
    return s.normalize(x + lo * u);
  };

  Vec walk_target = x;
  if (kind == "face-walk") {
    const auto& F = faces.front();
    double best = -1.0;
    for (const auto& p : F.sample_points()) {
      double d = s.norm(p - x);
      if (d > best) {
        best = d;
        walk_target = p;
      }
    }
  }

  nlohmann::json rows = nlohmann::json::array();
  for (int n = 1; n <= steps; ++n) {
    double delta = std::ldexp(1.0, -n);
    Vec xn = x;
    if (kind == "constant") {
      xn = *constant_point;
    } else if (kind == "face-walk") {
      xn = x + (1.0 - delta) * (walk_target - x);
    } else if (kind == "cap-shrink") {
      xn = cap_point(delta);
    } else {  // random-tangent
      RngStream rs(cfg.seed, "sequence_probe", static_cast<uint64_t>(n));
      bool found = false;
      for (int att = 0; att < 2000 && !found; ++att) {
        Vec dir = rs.gaussian_vec(s.dim());
        while (norm_l2(dir) < 1e-9) dir = rs.gaussian_vec(s.dim());
        Vec y = s.normalize(dir);
        if (s.norm(0.5 * (x + y)) >= 1.0 - delta) {
          xn = y;
          found = true;
        }
      }
      if (!found) xn = cap_point(delta);
    }

    nlohmann::json row = {{"n", n},
                          {"x_n", xn.data()},
                          {"norm_sum", s.norm(xn + x)},
                          {"dist_to_x", s.norm(xn - x)}};
    nlohmann::json per_f = nlohmann::json::array();
    for (size_t i = 0; i < faces.size(); ++i) {
      per_f.push_back({{"f", probes[i].as_vec().data()},
                       {"f_of_xn", probes[i](xn)},
                       {"dist_to_face", distance_to_set(s, xn, faces[i]).value}});
    }
    row["faces"] = per_f;
    rows.push_back(row);
  }

  ProbeReport rep;
  rep.generator = kind;
  rep.table = {{"x", x.data()}, {"generator", kind}, {"rows", rows}};
  return rep;
}

}  // namespace normlab
