#include "normlab/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace normlab {
namespace {

constexpr double kEps = 1e-10;

// Tableau with an objective row appended at the end. basis[r] is the column
// basic in row r.
struct Tableau {
  int m = 0, n = 0;
  std::vector<std::vector<double>> t;  // (m+1) x (n+1); last col = rhs
  std::vector<int> basis;

  void pivot(int pr, int pc) {
    double p = t[pr][pc];
    for (int j = 0; j <= n; ++j) t[pr][j] /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == pr) continue;
      double f = t[i][pc];
      if (f == 0.0) continue;
      for (int j = 0; j <= n; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland's rule. Returns false when optimal, throws on unbounded.
  bool step() {
    int pc = -1;
    for (int j = 0; j < n; ++j) {
      if (t[m][j] < -kEps) {
        pc = j;
        break;
      }
    }
    if (pc < 0) return false;
    int pr = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][pc] > kEps) {
        double ratio = t[i][n] / t[i][pc];
        if (ratio < best - kEps || (ratio < best + kEps && (pr < 0 || basis[i] < basis[pr]))) {
          best = ratio;
          pr = i;
        }
      }
    }
    if (pr < 0) throw std::overflow_error("lp: unbounded");
    pivot(pr, pc);
    return true;
  }
};

}  // namespace

LpResult solve_lp(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double> c) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());

  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(A[i].size()) != n) throw std::invalid_argument("lp: ragged matrix");
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }

  // Phase 1: artificials form the starting basis.
  Tableau tb;
  tb.m = m;
  tb.n = n + m;
  tb.t.assign(m + 1, std::vector<double>(tb.n + 1, 0.0));
  tb.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tb.t[i][j] = A[i][j];
    tb.t[i][n + i] = 1.0;
    tb.t[i][tb.n] = b[i];
    tb.basis[i] = n + i;
  }
  // phase-1 objective: sum of artificials, expressed over the basis
  for (int j = 0; j <= tb.n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += tb.t[i][j];
    tb.t[m][j] = (j >= n && j < n + m) ? 1.0 - s : -s;
  }

  LpResult res;
  try {
    while (tb.step()) {
    }
  } catch (const std::overflow_error&) {
    res.status = LpResult::Status::infeasible;  // phase 1 is always bounded
    return res;
  }
  if (-tb.t[m][tb.n] > 1e-7) {
    res.status = LpResult::Status::infeasible;
    return res;
  }
  // Drive lingering artificials out of the basis when possible.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] >= n) {
      int pc = -1;
      for (int j = 0; j < n; ++j) {
        if (std::abs(tb.t[i][j]) > 1e-8) {
          pc = j;
          break;
        }
      }
      if (pc >= 0) tb.pivot(i, pc);
    }
  }

  // Phase 2: rebuild the objective row over the current basis.
  for (int j = 0; j <= tb.n; ++j) tb.t[m][j] = 0.0;
  for (int j = 0; j < n; ++j) tb.t[m][j] = c[j];
  for (int j = n; j < tb.n; ++j) tb.t[m][j] = 1e9;  // keep artificials out
  for (int i = 0; i < m; ++i) {
    int bj = tb.basis[i];
    double cb = bj < n ? c[bj] : 1e9;
    if (cb == 0.0) continue;
    for (int j = 0; j <= tb.n; ++j) tb.t[m][j] -= cb * tb.t[i][j];
  }

  try {
    while (tb.step()) {
    }
  } catch (const std::overflow_error&) {
    res.status = LpResult::Status::unbounded;
    return res;
  }

  res.status = LpResult::Status::optimal;
  res.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.n];
  }
  res.value = 0.0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace normlab
