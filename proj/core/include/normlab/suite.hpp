#pragma once

#include <string>

#include "normlab/catalogue.hpp"
#include "normlab/verdict.hpp"

namespace normlab {

/// Dispatch a property check by name. Properties that are automatic in
/// finite dimensions (clur, nsc, wnsc, kk, weakly-clur) return constant
/// holds-exact verdicts with a note. Throws on unknown label or property.
Verdict run_check(const Catalogue& cat, const std::string& label, const std::string& property,
                  const ProbeConfig& cfg);

const std::vector<std::string>& known_properties();

/// Re-evaluate a failing certificate against the defining inequality of its
/// property. True when the recorded witness still reproduces the violation.
bool verify_certificate(const NormedSpace& s, const std::string& property,
                        const nlohmann::json& cert, const ProbeConfig& cfg);

/// The golden reproduction: on the max-norm plane with x = (1,1),
/// x* = (1/2,1/2) and x_n = (eps,1), computes ||x_n + x||, x*(x), the exposed
/// face of x* and d(x_n, face). With assert_values (eps = 0) the three
/// values 2, 1, 1 are enforced to 1e-12.
nlohmann::json repro_golden(bool assert_values, double eps = 0.0);

struct SuiteReport {
  nlohmann::json doc;
  bool all_consistent = false;
  double elapsed_seconds = 0.0;  // reported separately; never serialized
};

/// Every checker on every built-in space plus the cross-theorem consistency
/// table. Deterministic given the seed: the report contains no wall-clock
/// data.
SuiteReport run_suite(const Catalogue& cat, const ProbeConfig& cfg);

}  // namespace normlab
