#pragma once

#include <hexaspinor/norden.hpp>
#include <hexaspinor/realforms.hpp>
#include <hexaspinor/report.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

struct NullPair {
  Vec4 x;  // spinor X^a, gauge-fixed so its largest-magnitude component is 1
  Vec4 y;  // cospinor Y_b
  double residual = 0;  // |x y^T - p| max norm
};

struct CanonicalForm {
  std::array<cd, 4> lambda;  // eigenvalues, descending imaginary part
  cd r16, r23, r45;          // A-operator pairings of the three canonical planes
  Mat4 u;                    // unit-determinant diagonalizer
};

struct Flag {
  Vec6 k, n;  // flagpole pair, real isotropic, in real-frame components
  Vec6 l, m;  // flag-plane vectors, real, norm -2
  double extension = 0;       // |first-type V+W| or |second-type T+Z|
  cd extension_value;         // signed value before taking the magnitude
  enum class Type { first, second } extension_type = Type::first;
};

// pf(R) = 2(R^{12}R^{34} - R^{13}R^{24} + R^{14}R^{23}) = 1/2 R^{ab} R_{ab}
cd pfaffian(const Bivector4& r);

// true iff pf vanishes; cross-checked against the rank condition (third
// singular value).  Throws when the two tests disagree.
bool is_simple(const Bivector4& r, double tol = 1e-10);

// Rank-1 factorization p_a{}^b = X^a Y_b of a traceless null matrix.
NullPair extract_null_pair(const Mat4& p, double rank_tol = 1e-8);

// q in {0,6}: iR is Hermitian; eigen-decomposition with the fixed ordering.
CanonicalForm canonical_form(const NordenSet& n, const RealFormData& rf, const Mat4& r,
                             double tol = 1e-9);

// Twistor flag in R^6_(2,4) from a spinor basis satisfying the null-pairing
// and normalization conditions.
Flag build_flag(const NordenSet& n, const RealFormData& rf24, const Vec4& x, const Vec4& y,
                const Vec4& z, const Vec4& t, double tol = 1e-9);

// The compensating phase map with tau = exp(i theta):
// X -> X/tau, Z -> Z/tau, T -> tau T, Y -> tau Y.
void rotate_flag_basis(cd tau, Vec4& x, Vec4& y, Vec4& z, Vec4& t);

Report bivgeo_suite(const NordenSet& n, std::uint64_t seed = 2024, int samples = 200);

}  // namespace hexaspinor
