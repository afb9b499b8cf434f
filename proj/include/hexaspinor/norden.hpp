#pragma once

#include <array>

#include <hexaspinor/report.hpp>
#include <hexaspinor/tensor.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

// The six connecting operators of the special basis together with the metric
// data they induce.  eta_up[al] holds eta_al{}^{ab}, eta_dn[al] holds
// eta^al{}_{ab}; both tables are antisymmetric 4x4 blocks.  metric_g is the
// 6x6 metric reproduced by the operators via the quadrivector, and equals
// diag(1,1,-1,-1,-1,-1) for this basis.
struct NordenSet {
  std::array<Mat4, 6> eta_up;
  std::array<Mat4, 6> eta_dn;
  Mat6 metric_g;
  Epsilon4 eps4;

  // metric_g is its own inverse for the special basis; kept explicit so the
  // raising/lowering sites read like the formulas.
  Mat6 metric_g_inv;
};

// A_{al be d}{}^c, antisymmetric in (al,be), trace-free in (c,d).
// a_low[al][be](d,c) stores A_{al be d}{}^c; a_up[al][be] is the
// metric-raised A^{al be}{}_d{}^c.
struct AOperators {
  std::array<std::array<Mat4, 6>, 6> a_low;
  std::array<std::array<Mat4, 6>, 6> a_up;
};

// gamma_al = sqrt(2) [[0, sigma_al], [eta_al, 0]] acting on C^8, with
// sigma_al = -(eta_al pair-lowered).  gamma7 = i gamma_1...gamma_6 squares to
// the identity and anticommutes with every gamma_al.
struct GammaSet {
  std::array<Mat8, 6> gamma;
  std::array<Mat4, 6> sigma;
  Mat8 gamma7;
};

// Exact special-basis tables with eps_{1234} = 1; the induced metric is
// computed from the tables and verified against both quadrivector
// reproductions at construction.
NordenSet build_norden_special();

// Validates a user-supplied operator table by running the same construction
// checks; throws input_error when the completeness relations fail.
NordenSet make_norden(const std::array<Mat4, 6>& eta_up, const std::array<Mat4, 6>& eta_dn,
                      cd eps = cd(1, 0));

// r^al = 1/2 eta^al_{ab} R^{ab}
Vec6 bivector_to_vector(const NordenSet& n, const Bivector4& r);

// R^{ab} = eta_al^{ab} r^al
Bivector4 vector_to_bivector(const NordenSet& n, const Vec6& r);

// R_{ab} = 1/2 eps_{abcd} R^{cd}
Bivector4 lower_bivector(const NordenSet& n, const Bivector4& r);
Bivector4 raise_bivector(const NordenSet& n, const Bivector4& r);

AOperators build_a_operators(const NordenSet& n);

// T_{al be} = A_{al be b}{}^a T_a{}^b for traceless T
Mat6 push_traceless_matrix(const AOperators& a, const Mat4& t);
// T_m{}^n = 1/2 A^{al be}{}_m{}^n T_{be al} for antisymmetric T
Mat4 pull_antisymmetric_matrix(const AOperators& a, const Mat6& t);

GammaSet build_gammas(const NordenSet& n);

// The 6-vector e_{al be ga de la mu} built from the delta expansion with
// e-tilde = i/8, contracted through three A-operators.
CTensor six_vector(const NordenSet& n, const AOperators& a);

// Identity suite over the operator tables: one named residual per identity.
Report identity_suite(const NordenSet& n, std::uint64_t seed = 2024);

}  // namespace hexaspinor
