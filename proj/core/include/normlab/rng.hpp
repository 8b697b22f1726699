#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "normlab/vec.hpp"

namespace normlab {

// splitmix64; output is identical on every platform, which keeps seeded
// reports byte-stable.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Named sub-stream of the global seed. Streams derived from distinct
/// (label, index) pairs are independent, so adding a consumer never
/// perturbs the draws seen by existing ones.
class RngStream {
 public:
  RngStream(uint64_t seed, std::string_view label, uint64_t index = 0) {
    state_ = seed ^ (0x632be59bd9b4e019ULL * (fnv1a(label) + 0x9e3779b97f4a7c15ULL * (index + 1)));
    // warm up
    splitmix64(state_);
    splitmix64(state_);
  }

  uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  int uniform_int(int n) {  // [0, n)
    return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
  }

  /// Standard normal via Box-Muller (portable, unlike std::normal_distribution).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Vec gaussian_vec(int dim) {
    Vec v = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian();
    return v;
  }

 private:
  uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace normlab
