#pragma once

#include <vector>

#include <hexaspinor/norden.hpp>
#include <hexaspinor/report.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

// Flat-space solution family X^a = Xdot^a - i r^{ab} Ydot_b, Y_b = Ydot_b.
struct BitwistorSolution {
  Vec4 xdot;
  Vec4 ydot;
};

struct TwistorPoint {
  Vec4 x;
  Vec4 y;
};

// 8-component twistor vector X^A = (X^a, Y_b) with the quadratic form
// eps_{AB} X^A X^B = 2 X^a Y_a.
struct Twistor2Vector {
  Vec8 v;
  static Twistor2Vector from_parts(const Vec4& x, const Vec4& y) {
    Twistor2Vector t;
    t.v << x, y;
    return t;
  }
};

struct GeneratorSolution {
  Bivector4 r_particular;
  std::array<Bivector4, 3> homogeneous_basis;
  int rank = 0;
  double residual = 0;
};

struct PointSolution {
  Bivector4 r;
  int rank = 0;
  double residual = 0;
};

struct HomogeneousCoords {
  Vec8 coords;      // (R^12, R^13, R^14, R^23, R^24, R^34, R^15, R^51)
  Mat8 pair_form;   // R^{KL}
  cd nf;            // 1/4 R^{AB} R_{AB}; vanishes on image points
};

// The eight 8x8 connecting operators with their metric data.
struct EtaSet8 {
  std::array<Mat8, 8> eta;     // eta^A_{KL}
  std::array<Mat8, 8> eta_up;  // pair-raised eta_A^{KL}
  Mat8 metric_g;               // G_{AB} = identity
  Mat8 eps_kl;                 // eps_{KL}, block antidiagonal, symmetric
  CTensor eps_klmn;            // pair metric eps_{KLMN} = eta^A_{KL} eta^A_{MN}
  Mat8 involution;             // S_A^M
  Mat8 s_tilde;                // the unit-determinant frame change between the two quadrics
};

struct OctonionTable {
  // structure constants eta_{ij}^k, real for this basis
  std::vector<double> c;  // 8*8*8, row-major [i][j][k]
  Vec8 identity;
  int reading = 0;  // which index-placement reading was selected

  double at(int i, int j, int k) const { return c[(i * 8 + j) * 8 + k]; }
  Vec8 multiply(const Vec8& x, const Vec8& y) const;
};

struct KleinReport {
  double redundancy_residual = 0;  // block 1 implied by block 2
  double recovery_residual = 0;    // two-incidence system solve for the 2x2 point
};

TwistorPoint evaluate_solution(const BitwistorSolution& sol, const Bivector4& r);

// Solves i r^{ab} Ydot_b = Xdot^a: particular solution plus the 3-dimensional
// homogeneous family of simple bivectors annihilating Ydot.
GeneratorSolution solve_point_to_generator(const Vec4& xdot, const Vec4& ydot,
                                           double tol = 1e-10);

// Recovers the unique bivector from four incidence pairs satisfying the
// pairwise compatibility conditions.
PointSolution solve_generator_to_point(const std::array<TwistorPoint, 4>& pairs,
                                       double tol = 1e-9);

// Rank of the stacked incidence system for a subset of pairs (counting claims
// of 5.4).
int incidence_rank(const std::vector<TwistorPoint>& pairs, double rel_tol = 1e-10);

HomogeneousCoords homogeneous_coords(const NordenSet& n, const Bivector4& r);

EtaSet8 build_eta8();

// rho = +-1 deciding the family of a planar generator spanned by four
// eps-isotropic independent vectors.
int family_test(const EtaSet8& e8, const std::array<Twistor2Vector, 4>& gen,
                double tol = 1e-9);

OctonionTable build_octonion_table(const EtaSet8& e8, const Vec8& x, double tol = 1e-9);
OctonionTable build_octonion_table(const EtaSet8& e8);  // default X: slots 1 and 5

// Klein correspondence checks on the restricted generators (vanishing spinor
// part): the four
// incidence equations reduce to the single significant 2-spinor relation.
KleinReport klein_slice(const Vec2& pi_dot, const Mat2& minkowski_point);

Report octo_suite(const NordenSet& n, std::uint64_t seed = 2024, int samples = 200);

}  // namespace hexaspinor
