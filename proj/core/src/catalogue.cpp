#include "normlab/catalogue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normlab/rng.hpp"

namespace normlab {

void Catalogue::add(std::string label, NormedSpace space) {
  for (const auto& [l, _] : spaces_)
    if (l == label) throw std::invalid_argument("Catalogue: duplicate label " + label);
  spaces_.emplace_back(std::move(label), std::move(space));
  std::sort(spaces_.begin(), spaces_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

const NormedSpace* Catalogue::find(const std::string& label) const {
  for (const auto& [l, s] : spaces_)
    if (l == label) return &s;
  return nullptr;
}

Catalogue Catalogue::builtins() {
  Catalogue c;
  c.add("l2_2", NormedSpace(2, LpFamily{2.0}));
  c.add("l1_2", NormedSpace(2, LpFamily{1.0}));
  c.add("linf_2", NormedSpace(2, LpFamily{kInf}));
  std::vector<Vec> hex;
  for (int k = 0; k < 6; ++k) {
    double a = M_PI * k / 3.0;
    hex.push_back(Vec{std::cos(a), std::sin(a)});
  }
  c.add("hexagon", NormedSpace(2, PolytopeVFamily{hex}));
  c.add("lens_default", NormedSpace(2, LensFamily{0.5, 1.0}));
  c.add("stadium_default", NormedSpace(2, StadiumFamily{0.5, 1.0}));
  c.add("one_two_mix_2", NormedSpace(2, OneTwoMixFamily{}));
  c.add("l2_3", NormedSpace(3, LpFamily{2.0}));
  c.add("linf_3", NormedSpace(3, LpFamily{kInf}));
  return c;
}

namespace {

Vec vec_from_json(const nlohmann::json& j) {
  std::vector<double> c;
  for (const auto& v : j) c.push_back(v.get<double>());
  return Vec(std::move(c));
}

}  // namespace

NormedSpace space_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("family"))
    throw std::invalid_argument("space descriptor needs 'dim' and 'family'");
  int dim = j.at("dim").get<int>();
  const auto& fam = j.at("family");
  std::string kind = fam.at("kind").get<std::string>();
  double tol = j.value("tol", 1e-9);

  if (kind == "lp") {
    double p;
    const auto& pj = fam.at("p");
    if (pj.is_string()) {
      std::string ps = pj.get<std::string>();
      if (ps != "inf" && ps != "Inf" && ps != "infinity")
        throw std::invalid_argument("lp family: bad p string '" + ps + "'");
      p = kInf;
    } else {
      p = pj.get<double>();
    }
    return NormedSpace(dim, LpFamily{p}, tol);
  }
  if (kind == "polytope_v") {
    std::vector<Vec> vs;
    for (const auto& row : fam.at("vertices")) vs.push_back(vec_from_json(row));
    return NormedSpace(dim, PolytopeVFamily{std::move(vs)}, tol);
  }
  if (kind == "polytope_h") {
    std::vector<Functional> fs;
    for (const auto& row : fam.at("facets")) fs.push_back(Functional{vec_from_json(row)});
    return NormedSpace(dim, PolytopeHFamily{std::move(fs)}, tol);
  }
  if (kind == "one_two_mix") return NormedSpace(dim, OneTwoMixFamily{}, tol);
  if (kind == "lens")
    return NormedSpace(dim, LensFamily{fam.at("d").get<double>(), fam.at("R").get<double>()}, tol);
  if (kind == "stadium")
    return NormedSpace(dim, StadiumFamily{fam.at("c").get<double>(), fam.at("r").get<double>()},
                       tol);
  throw std::invalid_argument("unknown family kind '" + kind + "'");
}

nlohmann::json space_to_json(const NormedSpace& s) {
  nlohmann::json fam;
  if (const auto* lp = std::get_if<LpFamily>(&s.family())) {
    fam["kind"] = "lp";
    if (lp->p == kInf)
      fam["p"] = "inf";
    else
      fam["p"] = lp->p;
  } else if (const auto* pv = std::get_if<PolytopeVFamily>(&s.family())) {
    fam["kind"] = "polytope_v";
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : pv->vertices) vs.push_back(v.data());
    fam["vertices"] = vs;
  } else if (const auto* ph = std::get_if<PolytopeHFamily>(&s.family())) {
    fam["kind"] = "polytope_h";
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : ph->facets) fs.push_back(f.as_vec().data());
    fam["facets"] = fs;
  } else if (std::holds_alternative<OneTwoMixFamily>(s.family())) {
    fam["kind"] = "one_two_mix";
  } else if (const auto* le = std::get_if<LensFamily>(&s.family())) {
    fam["kind"] = "lens";
    fam["d"] = le->d;
    fam["R"] = le->R;
  } else if (const auto* st = std::get_if<StadiumFamily>(&s.family())) {
    fam["kind"] = "stadium";
    fam["c"] = st->c;
    fam["r"] = st->r;
  }
  return nlohmann::json{{"dim", s.dim()}, {"family", fam}, {"tol", s.tol()}};
}

void spot_check_norm_axioms(const NormedSpace& s, int samples, uint64_t seed) {
  auto pts = s.sphere_sample(samples, seed);
  RngStream rs(seed, "axiom_scalars");
  if (s.norm(Vec::zero(s.dim())) != 0.0)
    throw std::logic_error("norm axiom violation: ||0|| != 0");
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec& x = pts[i];
    const Vec& y = pts[(i + 1) % pts.size()];
    double nx = s.norm(x), ny = s.norm(y);
    if (std::abs(nx - 1.0) > 1e-9)
      throw std::logic_error("norm axiom violation: sphere sample not unit");
    double a = rs.uniform(-3.0, 3.0);
    if (std::abs(s.norm(a * x) - std::abs(a) * nx) > 1e-9 * std::max(1.0, std::abs(a)))
      throw std::logic_error("norm axiom violation: homogeneity");
    if (s.norm(x + y) > nx + ny + 1e-9)
      throw std::logic_error("norm axiom violation: triangle inequality");
  }
}

}  // namespace normlab
