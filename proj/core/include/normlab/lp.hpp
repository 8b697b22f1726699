#pragma once

#include <vector>

namespace normlab {

/// Dense two-phase simplex for the tiny LPs that exact ball geometry needs
/// (point-to-polytope distances, gauges of V-polytopes, boundedness checks).
///
///   minimize c^T x   subject to   A x = b,  x >= 0
///
/// Bland's rule, so it terminates on degenerate geometry. Sized for a handful
/// of rows and a few dozen columns; not a general-purpose solver.
struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::optimal;
  double value = 0.0;
  std::vector<double> x;

  bool ok() const { return status == Status::optimal; }
};

LpResult solve_lp(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double> c);

}  // namespace normlab
