#pragma once

#include <string>

#include "normlab/faces.hpp"
#include "normlab/verdict.hpp"

namespace normlab {

/// Every exposed face of the ball is a singleton. Exact by classification
/// for the smooth-form families and by facet enumeration for polytopes.
Verdict check_rotund(const NormedSpace& s, const ProbeConfig& cfg);

/// Every sphere point has a unique norming functional.
Verdict check_smooth(const NormedSpace& s, const ProbeConfig& cfg);

/// Tangency ||x+y|| = 2 forces every norming functional of x to norm y.
/// Exhaustive over face combinatorics for polytopes; derived from the
/// rotund/smooth classification otherwise.
Verdict check_acs(const NormedSpace& s, const ProbeConfig& cfg);

/// Primary route: ACS (equivalent in finite dimensions). In dimension <= 2
/// the rotund-or-smooth route is computed as well and the two must agree.
Verdict check_hlur(const NormedSpace& s, const ProbeConfig& cfg);

/// Slice shrinkage: H(slice(f, delta), face(f)) nonincreasing along the
/// schedule and vanishing at its end, for sampled unit functionals.
/// cfg.samples is the functional count here.
Verdict check_hs_slices(const NormedSpace& s, const ProbeConfig& cfg);

/// D[x,1/n] -> A0(x) together with face coincidence at x; asserted only in
/// the direction the finite-dimensional theory guarantees (HLUR implies
/// both).
Verdict dset_convergence(const NormedSpace& s, const Vec& x, const ProbeConfig& cfg);

struct ProbeReport {
  std::string generator;
  nlohmann::json table;  // one row per step: x_n, ||x_n+x||, d to each face, f(x_n)
};

/// Measurement-only trajectories d(x_n, face(f)) for sphere sequences with
/// ||x_n + x|| -> 2. Kinds: face-walk, random-tangent, cap-shrink, constant
/// (the last replays a fixed point and needs `constant_point`).
ProbeReport sequence_probe(const NormedSpace& s, const Vec& x, const std::string& kind,
                           const ProbeConfig& cfg, const Vec* constant_point = nullptr);

}  // namespace normlab
