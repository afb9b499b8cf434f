#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace hexaspinor {

using cd = std::complex<double>;

template <class Scalar, int N>
using SquareMatrix = Eigen::Matrix<Scalar, N, N>;

template <class Scalar, int N>
using ColVector = Eigen::Matrix<Scalar, N, 1>;

using Mat2 = SquareMatrix<cd, 2>;
using Mat4 = SquareMatrix<cd, 4>;
using Mat6 = SquareMatrix<cd, 6>;
using Mat8 = SquareMatrix<cd, 8>;
using MatX = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>;

using Vec2 = ColVector<cd, 2>;
using Vec4 = ColVector<cd, 4>;
using Vec6 = ColVector<cd, 6>;
using Vec8 = ColVector<cd, 8>;
using VecX = Eigen::Matrix<cd, Eigen::Dynamic, 1>;

// Antisymmetric 4x4 bivector R^{ab} (or R_{ab}); antisymmetry is a precondition
// checked by the operations that require it, not by the alias.
using Bivector4 = Mat4;

// 4x4 spin transformation S_a{}^b, det S = 1 for cover operations.
using SpinTransform = Mat4;

// 6x6 orthogonal transformation K_al{}^be w.r.t. the active metric.
using OrthoTransform = Mat6;

struct Tolerance {
  double absolute = 1e-10;
  double relative = 1e-10;

  Tolerance() = default;
  Tolerance(double abs_tol, double rel_tol) : absolute(abs_tol), relative(rel_tol) {
    if (!(absolute > 0.0) || !(relative > 0.0))
      throw std::invalid_argument("Tolerance thresholds must be strictly positive");
  }
};

// Error used for contract violations (bad shapes, broken preconditions,
// malformed inputs).  The CLI maps it to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Error for numerical failures inside an operation (rank deficiency, residual
// above tolerance, disagreeing cross-checks).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_antisymmetric(const Mat4& r, double tol = 1e-12) {
  return (r + r.transpose()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, r.cwiseAbs().maxCoeff());
}

}  // namespace hexaspinor
