#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "normlab/space.hpp"

namespace normlab {

/// Named spaces, label-sorted. The built-ins cover the rotund/smooth/neither
/// corners of the 2D classification plus two 3D spaces.
class Catalogue {
 public:
  void add(std::string label, NormedSpace space);
  const NormedSpace* find(const std::string& label) const;
  const std::vector<std::pair<std::string, NormedSpace>>& spaces() const { return spaces_; }

  static Catalogue builtins();

 private:
  std::vector<std::pair<std::string, NormedSpace>> spaces_;
};

/// Parse {"dim": n, "family": {"kind": ..., ...}}. "p" accepts a number or
/// the string "inf".
NormedSpace space_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const NormedSpace& s);

/// Norm-axiom spot check: homogeneity, triangle inequality, definiteness on
/// seeded samples. Throws on violation.
void spot_check_norm_axioms(const NormedSpace& s, int samples, uint64_t seed);

}  // namespace normlab
