#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace normlab {

/// Outcome of a property check. "holds-exact" is reserved for conclusions
/// backed by closed forms or exhaustive combinatorics; sampling alone can
/// only produce "holds-numerical". A failing verdict always carries a
/// re-verifiable certificate.
struct Verdict {
  enum class Status { holds_exact, holds_numerical, fails, inconclusive };

  Status status = Status::inconclusive;
  std::string property;
  nlohmann::json certificate;  // null unless failing (or informative)
  nlohmann::json stats;        // samples, seed, worst_margin, notes

  bool holds() const {
    return status == Status::holds_exact || status == Status::holds_numerical;
  }
};

std::string status_name(Verdict::Status s);
nlohmann::json to_json(const Verdict& v);

/// 0 holds, 1 fails, 2 inconclusive.
int verdict_exit_code(const Verdict& v);

/// Sampling / schedule configuration for the checkers. The delta schedule is
/// strictly decreasing and ends at 0.
struct ProbeConfig {
  int samples = 10000;
  uint64_t seed = 42;
  double tol = 1e-9;
  std::vector<double> delta_schedule = default_delta_schedule();

  static std::vector<double> default_delta_schedule();  // 2^-1 .. 2^-20, 0
  void validate() const;
};

}  // namespace normlab
