#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace normlab {

/// Point of the primal space. Coordinates are always finite.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<double> coords) : c_(std::move(coords)) { require_finite(); }
  Vec(std::initializer_list<double> coords) : c_(coords) { require_finite(); }

  static Vec zero(int dim) { return Vec(std::vector<double>(static_cast<size_t>(dim), 0.0)); }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  std::span<const double> coords() const { return c_; }
  const std::vector<double>& data() const { return c_; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
    return r;
  }
  friend Vec operator-(const Vec& a) { return -1.0 * a; }
  friend Vec operator*(double s, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] *= s;
    return r;
  }
  friend Vec operator*(const Vec& a, double s) { return s * a; }

  bool operator==(const Vec& o) const { return c_ == o.c_; }

 private:
  void require_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) throw std::invalid_argument("Vec: non-finite coordinate");
  }

  std::vector<double> c_;
};

inline double dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_l1(const Vec& x) {
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += std::abs(x[i]);
  return s;
}

inline double norm_l2(const Vec& x) { return std::sqrt(dot(x, x)); }

inline double norm_linf(const Vec& x) {
  double m = 0.0;
  for (int i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

inline double dist_l2(const Vec& a, const Vec& b) { return norm_l2(a - b); }

/// Lexicographic order on coordinates, used for deterministic tie-breaks.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

/// Element of the dual space; evaluation is the standard pairing.
class Functional {
 public:
  Functional() = default;
  explicit Functional(std::vector<double> coeffs) : w_(Vec(std::move(coeffs))) {}
  Functional(std::initializer_list<double> coeffs) : w_(coeffs) {}
  explicit Functional(Vec coeffs) : w_(std::move(coeffs)) {}

  int dim() const { return w_.dim(); }
  double operator[](int i) const { return w_[i]; }
  double& operator[](int i) { return w_[i]; }
  const Vec& as_vec() const { return w_; }

  double operator()(const Vec& x) const { return dot(w_, x); }

  bool operator==(const Functional& o) const { return w_ == o.w_; }

 private:
  Vec w_;
};

inline std::string to_string(const Vec& x) {
  std::string s = "(";
  for (int i = 0; i < x.dim(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

}  // namespace normlab
