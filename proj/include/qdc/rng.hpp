#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qdc {

// Seeded generator with an implementation-pinned mapping to doubles, so a
// seed yields the same stream on every platform (std::uniform_real_distribution
// is not portable).  mt19937_64 state, 53-bit uniforms, Box-Muller normals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [0,1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1).
  double uniform_open() {
    double x;
    do {
      x = uniform();
    } while (x <= 0.0);
    return x;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qdc
