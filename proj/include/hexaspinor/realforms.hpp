#pragma once

#include <hexaspinor/norden.hpp>
#include <hexaspinor/report.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

enum class SKind { polarity, involution };  // even q vs odd q branch

// One real inclusion R^6_(p,q) in CR^6.  H maps real-frame components into
// the complex orthonormal frame (ambient metric = identity); the involution
// S_al{}^{be'} fixes the real slice via S conj(v) = v; s is the spinor-level
// reality structure of Table 1.
struct RealFormData {
  int p = 0, q = 0;
  Mat6 h;          // H_i{}^al, diagonal
  Mat6 h_inv;      // H^i{}_al
  Mat6 involution; // S_al{}^{be'}
  SKind s_kind = SKind::polarity;
  Mat4 s;          // s_{aa'} (polarity) or s_a{}^{a'} (involution)
  Eigen::Matrix<double, 6, 6> induced_metric;  // g_{ij}, real
};

// Complex-frame connecting operators (ambient g = identity), derived from the
// special-basis set: slots 3..6 scaled by -i.
std::array<Mat4, 6> complex_frame_operators(const NordenSet& n);

// Supported signatures: (6,0), (1,5), (2,4), (3,3).
RealFormData build_real_form(const NordenSet& n, int p, int q);

// Reconstructs S_al{}^{be'} from the s block via the branch formula; must
// match rf.involution.
Mat6 involution_from_s(const NordenSet& n, const RealFormData& rf);

// true iff S_al^{be'} v^al = conj(v)^{be'} within tolerance
bool is_real_vector(const RealFormData& rf, const Vec6& v, double tol = 1e-10);

// Hermitian pairing used by the reality conditions: x^a s_{aa'} conj(y)^{a'}
cd reality_pairing(const RealFormData& rf, const Vec4& x, const Vec4& y);

// true iff all three pairings of the branch vanish: the simple bivector
// x ^ y lies in the real tangent space
bool bivector_reality_check(const RealFormData& rf, const Vec4& x, const Vec4& y,
                            double tol = 1e-10);

Report realform_suite(const NordenSet& n, std::uint64_t seed = 2024, int samples = 20);

}  // namespace hexaspinor
