#pragma once

#include <vector>

#include "normlab/space.hpp"
#include "normlab/verdict.hpp"

namespace normlab {

/// Square real matrix acting on the space by matrix-vector product.
struct OperatorMatrix {
  int n = 0;
  std::vector<double> a;  // row-major

  OperatorMatrix() = default;
  OperatorMatrix(int dim, double fill = 0.0)
      : n(dim), a(static_cast<size_t>(dim) * static_cast<size_t>(dim), fill) {}

  static OperatorMatrix identity(int dim);
  static OperatorMatrix from_rows(const std::vector<std::vector<double>>& rows);
  /// x |-> f(x) * y
  static OperatorMatrix rank_one(const Functional& f, const Vec& y);

  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }

  Vec apply(const Vec& x) const;
  OperatorMatrix plus_identity() const;
  OperatorMatrix scaled(double s) const;
  OperatorMatrix times(const OperatorMatrix& o) const;
};

struct OpNormResult {
  double value = 0.0;
  bool exact = true;  // false: best multistart value, a lower bound
  Vec argmax;
};

/// Induced operator norm. Closed forms for l1 / l2 / linf, exact vertex
/// maximum for polytope balls, seeded scan plus refinement otherwise.
/// `hints` are extra unit candidates that the search always evaluates.
OpNormResult operator_norm(const NormedSpace& s, const OperatorMatrix& T, const ProbeConfig& cfg,
                           const std::vector<Vec>& hints = {});

/// 1 + ||T|| - ||I + T||; zero (within tol) exactly when the Daugavet
/// equation holds.
double daugavet_residual(const NormedSpace& s, const OperatorMatrix& T, const ProbeConfig& cfg,
                         const std::vector<Vec>& hints = {});

struct EigenResidual {
  double value = 0.0;
  Vec witness;
  double lipschitz = 0.0;   // ||T|| + |lambda|, the certified rate
  double grid_mesh = 0.0;   // parameter mesh of the scan
};

/// min over the unit sphere of ||Tx - lambda x||, by dense boundary scan with
/// local refinement; `grid` points for the initial scan. `op_norm_hint`
/// short-circuits the Lipschitz bookkeeping when ||T|| is already known.
EigenResidual approx_eigen_residual(const NormedSpace& s, const OperatorMatrix& T, double lambda,
                                    const ProbeConfig& cfg, long grid = 200000,
                                    double op_norm_hint = -1.0);

/// Same scan without refinement: the independent grid oracle.
double eigen_residual_grid_oracle(const NormedSpace& s, const OperatorMatrix& T, double lambda,
                                  long grid);

/// Real eigenvalues of T (cross-check oracle for the metric residual).
std::vector<double> real_eigenvalues(const OperatorMatrix& T);

struct SpectrumReport {
  double op_norm = 0.0;
  bool op_norm_exact = true;
  double daugavet_residual = 0.0;
  double eigen_residual_at_norm = 0.0;
  Vec witness;
};

SpectrumReport spectrum_report(const NormedSpace& s, const OperatorMatrix& T,
                               const ProbeConfig& cfg);

/// Generates Daugavet-satisfying candidates (norming rank-ones, tangent
/// shears along flat faces, scaled identities, residual-filtered random
/// matrices) and tests whether ||T|| sits in the approximate point spectrum.
Verdict anti_daugavet_probe(const NormedSpace& s, const ProbeConfig& cfg);

}  // namespace normlab
