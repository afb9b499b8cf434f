#pragma once

#include <hexaspinor/norden.hpp>
#include <hexaspinor/realforms.hpp>
#include <hexaspinor/report.hpp>
#include <hexaspinor/tensor.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

// R_{al be ga de}, shape {6,6,6,6}, with the algebraic curvature symmetries.
using AlgCurvature6 = CTensor;
// R_c{}^d{}_s{}^r, shape {4,4,4,4}, layout [c][d][s][r].
using CurvatureSpinTensor = CTensor;

struct CurvatureDecomposition {
  CurvatureSpinTensor weyl;    // C_c{}^d{}_s{}^r, layout [c][d][s][r]
  CTensor ricci_part;          // P_{cs}{}^{dr}, layout [c][s][d][r]
  cd scalar;                   // R
};

// Sum of Kulkarni-Nomizu style products of random complex symmetric pairs;
// satisfies all algebraic curvature symmetries by construction.
// Deterministic per seed.
AlgCurvature6 random_alg_curvature(std::uint64_t seed, int terms);

// residuals of the three pair symmetries; max over components
double curvature_symmetry_residual(const AlgCurvature6& r);
double bianchi_tensor_residual(const AlgCurvature6& r);

CurvatureSpinTensor tensor_to_spintensor(const NordenSet& n, const AlgCurvature6& r);
AlgCurvature6 spintensor_to_tensor(const NordenSet& n, const CurvatureSpinTensor& rs);

cd scalar_curvature(const CurvatureSpinTensor& rs);
Mat6 ricci_from_tensor(const NordenSet& n, const AlgCurvature6& r);
Mat6 ricci_from_ricci_part(const NordenSet& n, const CTensor& p);

CurvatureDecomposition decompose(const NordenSet& n, const CurvatureSpinTensor& rs);

// Rebuilds the spin-tensor from a decomposition; the Ricci part enters with
// the 1/4 normalization bridge between the trace-law convention and the
// recomposition convention (see the test suite).
CurvatureSpinTensor recompose(const CurvatureDecomposition& d);

// max-norm of R_l{}^d{}_s{}^l + (1/8) R delta_s{}^d
double bianchi_residual(const CurvatureSpinTensor& rs);

// Reality predicates for both branches w.r.t. a real form's s structure.
bool spintensor_reality(const RealFormData& rf, const CurvatureSpinTensor& rs,
                        double tol = 1e-10);

Report curvature_suite(const NordenSet& n, std::uint64_t seed = 2024, int samples = 50);

}  // namespace hexaspinor
