#pragma once

#include <hexaspinor/norden.hpp>
#include <hexaspinor/report.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

struct LiftResult {
  SpinTransform s;
  double residual = 0;       // |push(s) - k| max norm
  int nullspace_dim = 1;     // measured intertwiner space dimension
};

// K_al{}^be = 1/2 eta_al{}^{ab} S_a{}^c S_b{}^d eta^be{}_{cd}.
// Requires det S = 1 within tolerance; the image satisfies K g K^T = g and
// det K = +1.
OrthoTransform push(const NordenSet& n, const SpinTransform& s, double tol = 1e-8);

// Inverse of push on the special branch.  The two valid answers are +-S; the
// returned representative has its largest-magnitude entry with argument in
// (-pi/2, pi/2], ties broken by smallest flat index.
LiftResult lift(const NordenSet& n, const OrthoTransform& k, double tol = 1e-8);

// T_{al be} = A_{al be b}{}^a T_a{}^b for traceless T; equals the derivative
// of push at the identity after raising the second index.
Mat6 push_infinitesimal(const NordenSet& n, const Mat4& t, double tol = 1e-10);

bool is_special(const NordenSet& n, const OrthoTransform& k, double tol = 1e-8);

double orthogonality_residual(const NordenSet& n, const OrthoTransform& k);

// applies the +-S sign convention used by lift
SpinTransform canonical_sign(const SpinTransform& s);

Report cover_suite(const NordenSet& n, std::uint64_t seed = 2024, int samples = 100);

}  // namespace hexaspinor
