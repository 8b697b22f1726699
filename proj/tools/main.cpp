// Command-line interface for the normed-space geometry lab: one verb per
// concept (space, check, converge, daugavet, farthest, repro, suite).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "normlab/catalogue.hpp"
#include "normlab/daugavet.hpp"
#include "normlab/farthest.hpp"
#include "normlab/properties.hpp"
#include "normlab/suite.hpp"

namespace {

using nlohmann::json;

normlab::Vec parse_vec(const std::string& text) {
  std::vector<double> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stod(tok));
  if (c.empty()) throw CLI::ValidationError("expected comma-separated coordinates");
  return normlab::Vec(std::move(c));
}

std::vector<normlab::Vec> parse_points(const std::string& text) {
  std::vector<normlab::Vec> pts;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';'))
    if (!row.empty()) pts.push_back(parse_vec(row));
  if (pts.empty()) throw CLI::ValidationError("expected ';'-separated point list");
  return pts;
}

normlab::OperatorMatrix parse_matrix(const std::string& text) {
  auto rows = parse_points(text);
  std::vector<std::vector<double>> r;
  for (const auto& v : rows) r.emplace_back(v.data());
  return normlab::OperatorMatrix::from_rows(r);
}

// canonical output: sorted keys, newline-terminated
void emit(const json& doc, const std::string& json_out) {
  std::string text = doc.dump() + "\n";
  std::cout << text;
  if (!json_out.empty()) {
    std::ofstream f(json_out, std::ios::binary);
    f << text;
  }
}

const normlab::NormedSpace& need_space(const normlab::Catalogue& cat, const std::string& label) {
  const auto* s = cat.find(label);
  if (!s) throw std::invalid_argument("unknown space label '" + label + "'");
  return *s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometry lab for finite-dimensional normed spaces"};
  app.require_subcommand(1);

  uint64_t seed = 42;
  if (const char* env = std::getenv("BANACH_GEOM_SEED")) seed = std::strtoull(env, nullptr, 10);
  int samples = 10000;
  double tol = 1e-9;
  std::string json_out;
  app.add_option("--seed", seed, "global random seed (env BANACH_GEOM_SEED)");
  app.add_option("--samples", samples, "sample budget for the checkers");
  app.add_option("--tol", tol, "membership/equality tolerance");
  app.add_option("--json-out", json_out, "also write the JSON report to this path");

  // space info <label>
  auto* sc_space = app.add_subcommand("space", "inspect catalogue spaces");
  auto* sc_info = sc_space->add_subcommand("info", "print a space descriptor");
  std::string info_label;
  sc_info->add_option("label", info_label)->required();

  // check <label> <property>
  auto* sc_check = app.add_subcommand("check", "run a property checker");
  std::string check_label, check_property;
  bool check_verify = false;
  sc_check->add_option("label", check_label)->required();
  sc_check->add_option("property", check_property)->required();
  sc_check->add_flag("--verify", check_verify, "re-verify a failing certificate");

  // converge <label> --point ...
  auto* sc_conv = app.add_subcommand("converge", "D-set convergence and sequence probes at a point");
  std::string conv_label, conv_point, conv_probe, conv_at;
  sc_conv->add_option("label", conv_label)->required();
  sc_conv->add_option("--point", conv_point, "sphere point, comma-separated")->required();
  sc_conv->add_option("--probe", conv_probe,
                      "also run a sequence probe: face-walk | random-tangent | cap-shrink | constant");
  sc_conv->add_option("--at", conv_at, "fixed point for the constant probe");

  // daugavet <label> --matrix ...
  auto* sc_dau = app.add_subcommand("daugavet", "operator norms and the Daugavet equation");
  std::string dau_label, dau_matrix;
  sc_dau->add_option("label", dau_label)->required();
  sc_dau->add_option("--matrix", dau_matrix, "row-major, rows ';'-separated: \"0,1;0,0\"")
      ->required();

  // farthest <label> --points ... [--query ...| --density | --hull-check]
  auto* sc_far = app.add_subcommand("farthest", "farthest-point maps over a finite set");
  std::string far_label, far_points, far_query;
  bool far_density = false, far_hull = false;
  sc_far->add_option("label", far_label)->required();
  sc_far->add_option("--points", far_points, "the set K: \"x,y;x,y;...\"")->required();
  sc_far->add_option("--query", far_query, "query point for the farthest report");
  sc_far->add_flag("--density", far_density, "unique-farthest density experiment");
  sc_far->add_flag("--hull-check", far_hull, "convex hull vs Far K (Euclidean only)");

  // repro example-5-5
  auto* sc_repro = app.add_subcommand("repro", "golden reproductions");
  std::string repro_which;
  double repro_perturb = 0.0;
  bool repro_no_assert = false;
  sc_repro->add_option("case", repro_which, "which reproduction (example-5-5)")->required();
  sc_repro->add_option("--perturb", repro_perturb, "perturb the probe point first coordinate");
  sc_repro->add_flag("--no-assert", repro_no_assert, "report values without asserting them");

  auto* sc_suite = app.add_subcommand("suite", "all checkers on all built-ins plus cross-checks");

  CLI11_PARSE(app, argc, argv);

  normlab::ProbeConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.tol = tol;

  try {
    normlab::Catalogue cat = normlab::Catalogue::builtins();

    if (sc_info->parsed()) {
      const auto& s = need_space(cat, info_label);
      json doc = {{"label", info_label},
                  {"descriptor", normlab::space_to_json(s)},
                  {"polyhedral", s.is_polyhedral()}};
      if (s.is_polyhedral()) {
        doc["vertices"] = s.poly().vertices.size();
        doc["facets"] = s.poly().facets.size();
      }
      emit(doc, json_out);
      return 0;
    }

    if (sc_check->parsed()) {
      normlab::Verdict v = normlab::run_check(cat, check_label, check_property, cfg);
      json doc = normlab::to_json(v);
      if (check_verify && v.status == normlab::Verdict::Status::fails) {
        doc["certificate_reverified"] = normlab::verify_certificate(
            need_space(cat, check_label), check_property, v.certificate, cfg);
      }
      emit(doc, json_out);
      return normlab::verdict_exit_code(v);
    }

    if (sc_conv->parsed()) {
      const auto& s = need_space(cat, conv_label);
      normlab::Vec x = parse_vec(conv_point);
      normlab::Verdict v = normlab::dset_convergence(s, x, cfg);
      json doc = normlab::to_json(v);
      if (!conv_probe.empty()) {
        std::optional<normlab::Vec> at;
        if (!conv_at.empty()) at = parse_vec(conv_at);
        normlab::ProbeReport rep =
            normlab::sequence_probe(s, x, conv_probe, cfg, at ? &*at : nullptr);
        doc["probe"] = rep.table;
      }
      emit(doc, json_out);
      return normlab::verdict_exit_code(v);
    }

    if (sc_dau->parsed()) {
      const auto& s = need_space(cat, dau_label);
      normlab::OperatorMatrix T = parse_matrix(dau_matrix);
      normlab::SpectrumReport rep = normlab::spectrum_report(s, T, cfg);
      json doc = {{"op_norm", rep.op_norm},
                  {"op_norm_exact", rep.op_norm_exact},
                  {"daugavet_residual", rep.daugavet_residual},
                  {"daugavet_holds", rep.daugavet_residual <= tol},
                  {"eigen_residual_at_norm", rep.eigen_residual_at_norm},
                  {"witness", rep.witness.data()},
                  {"real_eigenvalues", normlab::real_eigenvalues(T)}};
      emit(doc, json_out);
      return 0;
    }

    if (sc_far->parsed()) {
      const auto& s = need_space(cat, far_label);
      normlab::PointSet K{parse_points(far_points), "cli"};
      if (far_hull) {
        normlab::Verdict v = normlab::hull_equality_check(s, K, cfg);
        emit(normlab::to_json(v), json_out);
        return normlab::verdict_exit_code(v);
      }
      if (far_density) {
        normlab::DensityReport rep = normlab::density_experiment(s, K, cfg);
        emit(json{{"samples", rep.samples},
                  {"unique_fraction", rep.unique_fraction},
                  {"seed", rep.seed},
                  {"hlur_warning", rep.hlur_warning}},
             json_out);
        return 0;
      }
      if (far_query.empty())
        throw std::invalid_argument("farthest: need --query, --density or --hull-check");
      normlab::FarthestReport rep = normlab::farthest_points(s, parse_vec(far_query), K);
      json att = json::array();
      for (const auto& p : rep.attaining) att.push_back(p.data());
      emit(json{{"query", rep.query.data()},
                {"far_distance", rep.far_distance},
                {"attaining", att},
                {"unique", rep.unique}},
           json_out);
      return 0;
    }

    if (sc_repro->parsed()) {
      if (repro_which != "example-5-5")
        throw std::invalid_argument("unknown reproduction '" + repro_which + "'");
      bool do_assert = !repro_no_assert && repro_perturb == 0.0;
      try {
        emit(normlab::repro_golden(do_assert, repro_perturb), json_out);
      } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
      return 0;
    }

    if (sc_suite->parsed()) {
      normlab::SuiteReport rep = normlab::run_suite(cat, cfg);
      emit(rep.doc, json_out);
      std::cerr << "suite elapsed: " << rep.elapsed_seconds << " s\n";
      return rep.all_consistent ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
