#include "normlab/verdict.hpp"

#include <stdexcept>

namespace normlab {

std::string status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::holds_exact:
      return "holds-exact";
    case Verdict::Status::holds_numerical:
      return "holds-numerical";
    case Verdict::Status::fails:
      return "fails";
    case Verdict::Status::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

nlohmann::json to_json(const Verdict& v) {
  return nlohmann::json{{"property", v.property},
                        {"status", status_name(v.status)},
                        {"certificate", v.certificate},
                        {"stats", v.stats}};
}

int verdict_exit_code(const Verdict& v) {
  if (v.holds()) return 0;
  if (v.status == Verdict::Status::fails) return 1;
  return 2;
}

std::vector<double> ProbeConfig::default_delta_schedule() {
  std::vector<double> d;
  for (int k = 1; k <= 20; ++k) d.push_back(std::ldexp(1.0, -k));
  d.push_back(0.0);
  return d;
}

void ProbeConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("ProbeConfig: samples must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("ProbeConfig: tol must be positive");
  if (delta_schedule.empty() || delta_schedule.back() != 0.0)
    throw std::invalid_argument("ProbeConfig: delta schedule must decrease to 0");
  for (size_t i = 1; i < delta_schedule.size(); ++i)
    if (!(delta_schedule[i] < delta_schedule[i - 1]))
      throw std::invalid_argument("ProbeConfig: delta schedule must be strictly decreasing");
}

}  // namespace normlab
