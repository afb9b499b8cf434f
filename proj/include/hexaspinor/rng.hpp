#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <hexaspinor/types.hpp>

namespace hexaspinor {

// Deterministic normal sampler: mt19937_64 + explicit Box-Muller, so streams
// are reproducible independently of the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    // 53-bit mantissa uniform in [0, 1)
    return (engine_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  cd cnormal() { return cd(normal(), normal()); }

  template <int N>
  SquareMatrix<cd, N> cmatrix() {
    SquareMatrix<cd, N> m;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m(i, j) = cnormal();
    return m;
  }

  template <int N>
  ColVector<cd, N> cvector() {
    ColVector<cd, N> v;
    for (int i = 0; i < N; ++i) v(i) = cnormal();
    return v;
  }

  // random antisymmetric complex 4x4
  Mat4 bivector() {
    Mat4 r = Mat4::Zero();
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        r(a, b) = cnormal();
        r(b, a) = -r(a, b);
      }
    return r;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace hexaspinor
