#include <hexaspinor/octo.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include <hexaspinor/bivgeo.hpp>
#include <hexaspinor/rng.hpp>

namespace hexaspinor {

namespace {

constexpr double kS2 = 0.70710678118654752440;

double max_abs(const MatX& m) { return m.cwiseAbs().maxCoeff(); }

// columns of the antisymmetric parametrization, matching rng.bivector order
std::array<Mat4, 6> antisym_basis() {
  std::array<Mat4, 6> b;
  int k = 0;
  for (int a = 0; a < 4; ++a)
    for (int c = a + 1; c < 4; ++c) {
      b[k] = Mat4::Zero();
      b[k](a, c) = 1;
      b[k](c, a) = -1;
      ++k;
    }
  return b;
}

// rows of i r^{ab} Ydot_b as a linear map from the 6 bivector parameters
Eigen::Matrix<cd, 4, 6> incidence_rows(const Vec4& ydot) {
  const std::array<Mat4, 6> basis = antisym_basis();
  Eigen::Matrix<cd, 4, 6> m;
  for (int k = 0; k < 6; ++k) m.col(k) = cd(0, 1) * (basis[k] * ydot);
  return m;
}

Bivector4 from_params(const ColVector<cd, 6>& p) {
  const std::array<Mat4, 6> basis = antisym_basis();
  Mat4 r = Mat4::Zero();
  for (int k = 0; k < 6; ++k) r += p(k) * basis[k];
  return r;
}

int rank_of(const MatX& m, double rel_tol) {
  Eigen::JacobiSVD<MatX> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

}  // namespace

TwistorPoint evaluate_solution(const BitwistorSolution& sol, const Bivector4& r) {
  if (!is_antisymmetric(r)) throw input_error("evaluate_solution: r must be antisymmetric");
  TwistorPoint p;
  p.x = sol.xdot - cd(0, 1) * (r * sol.ydot);
  p.y = sol.ydot;
  return p;
}

GeneratorSolution solve_point_to_generator(const Vec4& xdot, const Vec4& ydot, double tol) {
  const double yscale = ydot.cwiseAbs().maxCoeff();
  if (yscale == 0.0) throw input_error("solve_point_to_generator: Ydot must be nonzero");
  const cd incidence = (xdot.transpose() * ydot)(0);
  if (std::abs(incidence) > tol * std::max(1.0, xdot.cwiseAbs().maxCoeff() * yscale))
    throw input_error("solve_point_to_generator: incidence Xdot^a Ydot_a != 0");

  const Eigen::Matrix<cd, 4, 6> m = incidence_rows(ydot);
  Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  GeneratorSolution out;
  out.rank = rank_of(m, 1e-10);
  const ColVector<cd, 6> p = svd.solve(xdot);
  out.r_particular = from_params(p);
  out.residual = (cd(0, 1) * (out.r_particular * ydot) - xdot).cwiseAbs().maxCoeff();
  if (out.residual > 1e-9 * std::max(1.0, xdot.cwiseAbs().maxCoeff()))
    throw numeric_error("solve_point_to_generator: incidence system inconsistent");

  // annihilator basis of Ydot via SVD of the row map v -> Ydot^T v
  Eigen::JacobiSVD<MatX> ann(ydot.transpose(), Eigen::ComputeFullV);
  std::array<Vec4, 3> kernel;
  for (int k = 0; k < 3; ++k) kernel[k] = ann.matrixV().col(k + 1);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    const Vec4& a = kernel[pairs[k][0]];
    const Vec4& b = kernel[pairs[k][1]];
    out.homogeneous_basis[k] = a * b.transpose() - b * a.transpose();
  }
  return out;
}

PointSolution solve_generator_to_point(const std::array<TwistorPoint, 4>& pairs, double tol) {
  // compatibility: Xi.Yj + Xj.Yi = 0 for all i,j
  double scale = 1;
  for (const auto& p : pairs)
    scale = std::max({scale, p.x.cwiseAbs().maxCoeff(), p.y.cwiseAbs().maxCoeff()});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cd c = (pairs[i].x.transpose() * pairs[j].y)(0) +
                   (pairs[j].x.transpose() * pairs[i].y)(0);
      if (std::abs(c) > 1e-8 * scale * scale)
        throw input_error("solve_generator_to_point: compatibility conditions violated");
    }

  Eigen::Matrix<cd, 16, 6> sys;
  Eigen::Matrix<cd, 16, 1> rhs;
  for (int i = 0; i < 4; ++i) {
    sys.block<4, 6>(4 * i, 0) = incidence_rows(pairs[i].y);
    rhs.segment<4>(4 * i) = pairs[i].x;
  }
  PointSolution out;
  out.rank = rank_of(sys, 1e-10);
  if (out.rank < 6)
    throw input_error("solve_generator_to_point: degenerate generator data, rank " +
                      std::to_string(out.rank));
  Eigen::JacobiSVD<MatX> svd(sys, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const ColVector<cd, 6> p = svd.solve(rhs);
  out.r = from_params(p);
  double res = 0;
  for (int i = 0; i < 4; ++i)
    res = std::max(res,
                   (cd(0, 1) * (out.r * pairs[i].y) - pairs[i].x).cwiseAbs().maxCoeff());
  out.residual = res;
  if (res > tol * scale) throw numeric_error("solve_generator_to_point: residual above tolerance");
  return out;
}

int incidence_rank(const std::vector<TwistorPoint>& pairs, double rel_tol) {
  MatX sys(4 * pairs.size(), 6);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    sys.block<4, 6>(4 * static_cast<int>(i), 0) = incidence_rows(pairs[i].y);
  return rank_of(sys, rel_tol);
}

HomogeneousCoords homogeneous_coords(const NordenSet& n, const Bivector4& r) {
  const Bivector4 rl = lower_bivector(n, r);
  const cd pf = pfaffian(r);
  HomogeneousCoords out;
  out.coords << r(0, 1), r(0, 2), r(0, 3), r(1, 2), r(1, 3), r(2, 3), cd(0, -0.5) * pf,
      cd(0, -1);
  Mat8 p = Mat8::Zero();
  p.block<4, 4>(0, 0) = r;
  p.block<4, 4>(4, 4) = rl;
  p.block<4, 4>(0, 4) = cd(0, -0.5) * pf * Mat4::Identity();
  p.block<4, 4>(4, 0) = cd(0, -1) * Mat4::Identity();
  out.pair_form = p;

  Mat8 eps_kl = Mat8::Zero();
  eps_kl.block<4, 4>(0, 4) = Mat4::Identity();
  eps_kl.block<4, 4>(4, 0) = Mat4::Identity();
  const Mat8 plow = eps_kl * p * eps_kl;
  out.nf = 0.25 * (p.cwiseProduct(plow)).sum();
  return out;
}

EtaSet8 build_eta8() {
  EtaSet8 e;
  const cd i(0, 1);
  for (auto& m : e.eta) m = Mat8::Zero();

  struct Entry { int a, k, l; cd v; };
  // the significant coordinates of the eight operators, 1-based
  const Entry entries[] = {
      {2, 1, 2, kS2},      {2, 3, 4, kS2},      {5, 1, 2, -i * kS2}, {5, 3, 4, i * kS2},
      {2, 7, 8, kS2},      {2, 5, 6, kS2},      {5, 7, 8, -i * kS2}, {5, 5, 6, i * kS2},
      {1, 1, 4, -i * kS2}, {1, 2, 3, i * kS2},  {8, 1, 4, -kS2},     {8, 2, 3, -kS2},
      {1, 6, 7, -i * kS2}, {1, 5, 8, i * kS2},  {8, 6, 7, -kS2},     {8, 5, 8, -kS2},
      {7, 1, 3, -i * kS2}, {7, 2, 4, -i * kS2}, {6, 1, 3, kS2},      {6, 2, 4, -kS2},
      {7, 6, 8, i * kS2},  {7, 5, 7, i * kS2},  {6, 6, 8, -kS2},     {6, 5, 7, kS2},
      {4, 1, 5, kS2},      {4, 5, 1, kS2},      {3, 1, 5, -i * kS2}, {3, 5, 1, i * kS2},
      {4, 2, 6, kS2},      {4, 6, 2, kS2},      {3, 2, 6, -i * kS2}, {3, 6, 2, i * kS2},
      {4, 3, 7, kS2},      {4, 7, 3, kS2},      {3, 3, 7, -i * kS2}, {3, 7, 3, i * kS2},
      {4, 4, 8, kS2},      {4, 8, 4, kS2},      {3, 4, 8, -i * kS2}, {3, 8, 4, i * kS2},
  };
  for (const Entry& en : entries) e.eta[en.a - 1](en.k - 1, en.l - 1) = en.v;
  // the bivector-type operators carry antisymmetric blocks; mirror them
  for (int a : {0, 1, 4, 5, 6, 7})
    for (int k = 0; k < 8; ++k)
      for (int l = 0; l < 8; ++l)
        if (e.eta[a](k, l) != cd(0) && e.eta[a](l, k) == cd(0)) e.eta[a](l, k) = -e.eta[a](k, l);

  e.metric_g = Mat8::Identity();
  e.eps_kl = Mat8::Zero();
  e.eps_kl.block<4, 4>(0, 4) = Mat4::Identity();
  e.eps_kl.block<4, 4>(4, 0) = Mat4::Identity();
  for (int a = 0; a < 8; ++a) e.eta_up[a] = e.eps_kl * e.eta[a] * e.eps_kl.transpose();
  e.eps_klmn = CTensor({8, 8, 8, 8});
  for (int P = 0; P < 8; ++P)
    for (int Q = 0; Q < 8; ++Q)
      for (int R = 0; R < 8; ++R)
        for (int T = 0; T < 8; ++T) {
          cd acc = 0;
          for (int a = 0; a < 8; ++a) acc += e.eta[a](P, Q) * e.eta[a](R, T);
          e.eps_klmn({P, Q, R, T}) = acc;
        }
  e.involution = e.metric_g * e.eps_kl.inverse();  // G_{AK} = S_A^M eps_{KM}

  e.s_tilde = Mat8::Zero();
  e.s_tilde.block<4, 4>(0, 0) = i * kS2 * Mat4::Identity();
  e.s_tilde.block<4, 4>(0, 4) = -i * kS2 * Mat4::Identity();
  e.s_tilde.block<4, 4>(4, 0) = kS2 * Mat4::Identity();
  e.s_tilde.block<4, 4>(4, 4) = kS2 * Mat4::Identity();
  return e;
}

int family_test(const EtaSet8& e8, const std::array<Twistor2Vector, 4>& gen, double tol) {
  // preconditions: isotropy and independence
  double scale = 0;
  for (const auto& g : gen) scale = std::max(scale, g.v.cwiseAbs().maxCoeff());
  Mat4 gram;
  Eigen::Matrix<cd, 8, 4> span;
  for (int a = 0; a < 4; ++a) span.col(a) = gen[a].v;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      gram(a, b) = (gen[a].v.transpose() * e8.eps_kl * gen[b].v)(0);
      if (std::abs(gram(a, b)) > tol * scale * scale)
        throw input_error("family_test: generator vectors are not eps-isotropic");
    }
  if (rank_of(span, 1e-8) != 4)
    throw input_error("family_test: generator vectors are linearly dependent");

  // X^{ABCD} = eps^{ijkl} X_i^A X_j^B X_k^C X_l^D: only 8C4 index sets matter.
  // Evaluate both sides of the family relation on all KLMN and take the sign.
  CTensor x4({8, 8, 8, 8});
  for (int A = 0; A < 8; ++A)
    for (int B = 0; B < 8; ++B)
      for (int C = 0; C < 8; ++C)
        for (int D = 0; D < 8; ++D) {
          cd acc = 0;
          std::vector<int> q = {0, 1, 2, 3};
          do {
            acc += double(detail::permutation_sign(q)) * span(A, q[0]) * span(B, q[1]) *
                   span(C, q[2]) * span(D, q[3]);
          } while (std::next_permutation(q.begin(), q.end()));
          x4({A, B, C, D}) = acc;
        }

  // W_{KLMN} = 1/24 e_{ABCDKLMN} X^{ABCD} with the standard 8-symbol
  CTensor w({8, 8, 8, 8});
  for (int K = 0; K < 8; ++K)
    for (int L = 0; L < 8; ++L)
      for (int M = 0; M < 8; ++M)
        for (int N = 0; N < 8; ++N) {
          if (K == L || K == M || K == N || L == M || L == N || M == N) continue;
          std::vector<int> rest;
          for (int v = 0; v < 8; ++v)
            if (v != K && v != L && v != M && v != N) rest.push_back(v);
          cd acc = 0;
          std::sort(rest.begin(), rest.end());
          do {
            std::vector<int> full = {rest[0], rest[1], rest[2], rest[3], K, L, M, N};
            acc += double(detail::permutation_sign(full)) *
                   x4({rest[0], rest[1], rest[2], rest[3]});
          } while (std::next_permutation(rest.begin(), rest.end()));
          w({K, L, M, N}) = acc / 24.0;
        }

  // V_{KLMN} = eps_{KR} eps_{LT} eps_{MU} eps_{NV} X^{RTUV}; eps swaps halves
  auto sw = [](int k) { return k < 4 ? k + 4 : k - 4; };
  CTensor v({8, 8, 8, 8});
  for (int K = 0; K < 8; ++K)
    for (int L = 0; L < 8; ++L)
      for (int M = 0; M < 8; ++M)
        for (int N = 0; N < 8; ++N) v({K, L, M, N}) = x4({sw(K), sw(L), sw(M), sw(N)});

  // rho: the scalar relating W and V
  cd num = 0, den = 0;
  for (std::size_t f = 0; f < v.size(); ++f) {
    num += std::conj(v.data()[f]) * w.data()[f];
    den += std::conj(v.data()[f]) * v.data()[f];
  }
  if (std::abs(den) == 0.0) throw numeric_error("family_test: degenerate comparison");
  const cd rho = num / den;
  double resid = 0;
  for (std::size_t f = 0; f < v.size(); ++f)
    resid = std::max(resid, std::abs(w.data()[f] - rho * v.data()[f]));
  if (resid > tol * std::max(1.0, v.max_abs()))
    throw numeric_error("family_test: sides are not proportional");
  if (std::abs(rho - cd(1)) < 1e-6) return 1;
  if (std::abs(rho + cd(1)) < 1e-6) return -1;
  throw numeric_error("family_test: rho is not +-1");
}

Vec8 OctonionTable::multiply(const Vec8& x, const Vec8& y) const {
  Vec8 out = Vec8::Zero();
  for (int k = 0; k < 8; ++k) {
    cd acc = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) acc += at(i, j, k) * x(i) * y(j);
    out(k) = acc;
  }
  return out;
}

OctonionTable build_octonion_table(const EtaSet8& e8, const Vec8& x, double tol) {
  const cd xnorm = (x.transpose() * e8.eps_kl * x)(0);
  if (std::abs(xnorm - cd(2)) > tol)
    throw input_error("build_octonion_table: X^A X_A must equal 2");

  // identity element: 1/(4 sqrt 2) eta^{i AB} eps_{AB}
  Vec8 e;
  for (int i = 0; i < 8; ++i)
    e(i) = (1.0 / (4.0 * std::sqrt(2.0))) * (e8.eta_up[i].cwiseProduct(e8.eps_kl)).sum();

  // discrete search over the admissible index placements of the contraction
  Rng rng(77);
  std::array<Vec8, 6> probes;
  for (auto& p : probes) p = rng.cvector<8>();

  for (int reading = 0; reading < 8; ++reading) {
    const bool sj = reading & 1, sk = reading & 2, swi = reading & 4;
    std::vector<cd> t(8 * 8 * 8, cd(0));
    std::array<Vec8, 8> uj, vk;
    for (int a = 0; a < 8; ++a) {
      uj[a] = sj ? Vec8(e8.eta[a] * x) : Vec8(e8.eta[a].transpose() * x);
      vk[a] = sk ? Vec8(e8.eta[a] * x) : Vec8(e8.eta[a].transpose() * x);
    }
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) {
          cd acc = 0;
          for (int A = 0; A < 8; ++A)
            for (int B = 0; B < 8; ++B)
              acc += (swi ? e8.eta_up[i](B, A) : e8.eta_up[i](A, B)) * uj[j](A) * vk[k](B);
          t[(i * 8 + j) * 8 + k] = std::sqrt(2.0) * acc;
        }

    // unit and composition probes select the valid reading
    auto mulv = [&](const Vec8& a, const Vec8& b) {
      Vec8 out = Vec8::Zero();
      for (int k = 0; k < 8; ++k) {
        cd acc = 0;
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j) acc += t[(i * 8 + j) * 8 + k] * a(i) * b(j);
        out(k) = acc;
      }
      return out;
    };
    bool ok = true;
    for (const Vec8& p : probes) {
      if ((mulv(e, p) - p).cwiseAbs().maxCoeff() > 1e-9 ||
          (mulv(p, e) - p).cwiseAbs().maxCoeff() > 1e-9) { ok = false; break; }
      const Vec8 q = probes[0];
      const cd nx = (p.transpose() * p)(0), ny = (q.transpose() * q)(0);
      const Vec8 pq = mulv(p, q);
      if (std::abs((pq.transpose() * pq)(0) - nx * ny) >
          1e-8 * std::max(1.0, std::abs(nx * ny))) { ok = false; break; }
    }
    if (!ok) continue;

    OctonionTable out;
    out.reading = reading;
    out.identity = e;
    out.c.resize(8 * 8 * 8);
    double imag_max = 0;
    for (std::size_t f = 0; f < t.size(); ++f) {
      out.c[f] = t[f].real();
      imag_max = std::max(imag_max, std::abs(t[f].imag()));
    }
    if (imag_max > 1e-12)
      throw numeric_error("build_octonion_table: structure constants are not real");
    return out;
  }
  throw numeric_error(
      "build_octonion_table: no index reading satisfies the unit and composition laws");
}

OctonionTable build_octonion_table(const EtaSet8& e8) {
  Vec8 x = Vec8::Zero();
  x(0) = 1;
  x(4) = 1;
  return build_octonion_table(e8, x);
}

KleinReport klein_slice(const Vec2& pi_dot, const Mat2& minkowski_point) {
  const Mat2& m = minkowski_point;
  Mat2 eps2;
  eps2 << 0, 1, -1, 0;

  // block form: TL = -det(m) eps2 (simple-bivector locus), TR = i m
  Mat4 r = Mat4::Zero();
  r.block<2, 2>(0, 0) = -m.determinant() * eps2;
  r.block<2, 2>(0, 2) = cd(0, 1) * m;
  r.block<2, 2>(2, 0) = cd(0, -1) * m.transpose();
  r.block<2, 2>(2, 2) = eps2;

  KleinReport out;
  if (pi_dot.cwiseAbs().maxCoeff() == 0.0) {
    out.redundancy_residual = 0;
    out.recovery_residual = 0;
    return out;
  }

  // block 2 determines omega; block 1 must then vanish identically
  const Vec2 omega = eps2.inverse() * (cd(0, 1) * (m.transpose() * pi_dot));
  Vec4 y;
  y << pi_dot, omega;
  out.redundancy_residual = (r.block<2, 4>(0, 0) * y).cwiseAbs().maxCoeff() /
                            std::max(1.0, y.cwiseAbs().maxCoeff());

  // recover m from two incidences
  Rng rng(5);
  const Vec2 pi2 = rng.cvector<2>();
  const Vec2 om2 = eps2.inverse() * (cd(0, 1) * (m.transpose() * pi2));
  Eigen::Matrix<cd, 4, 4> sys = Eigen::Matrix<cd, 4, 4>::Zero();
  Eigen::Matrix<cd, 4, 1> rhs;
  int row = 0;
  for (const auto& [p, o] : {std::pair<Vec2, Vec2>{pi_dot, omega}, {pi2, om2}}) {
    const Vec2 lhs = eps2 * o;
    for (int ap = 0; ap < 2; ++ap) {
      for (int a = 0; a < 2; ++a) sys(row, a * 2 + ap) = cd(0, 1) * p(a);
      rhs(row) = lhs(ap);
      ++row;
    }
  }
  const Eigen::Matrix<cd, 4, 1> sol = sys.fullPivLu().solve(rhs);
  Mat2 mrec;
  mrec << sol(0), sol(1), sol(2), sol(3);
  out.recovery_residual = (mrec - m).cwiseAbs().maxCoeff() / std::max(1.0, max_abs(m));
  return out;
}

Report octo_suite(const NordenSet& n, std::uint64_t seed, int samples) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "octo";
  Rng rng(seed);

  // bitwistor pairing invariance and the radius identities
  double inv_pair = 0, r_radius = 0;
  for (int t = 0; t < 50; ++t) {
    BitwistorSolution sol{rng.cvector<4>(), rng.cvector<4>()};
    const Bivector4 r = rng.bivector();
    const TwistorPoint p = evaluate_solution(sol, r);
    inv_pair = std::max(inv_pair, std::abs((p.x.transpose() * p.y)(0) -
                                       (sol.xdot.transpose() * sol.ydot)(0)));
    const Mat4 rl = lower_bivector(n, r);
    const cd pf = pfaffian(r);
    r_radius = std::max(r_radius, std::abs(0.5 * (r.cwiseProduct(rl)).sum() - pf));
    r_radius = std::max(r_radius, max_abs(r * rl + 0.5 * pf * Mat4::Identity()) / max_abs(r * rl));
  }
  rep.add("solution_pairing_invariance", inv_pair, 1e-12);
  rep.add("radius_identities", r_radius, 1e-10);

  // point -> generator
  double p2g = 0, p2g_kill = 0, p2g_simple = 0, p2g_family = 0;
  int p2g_rank = 3;
  for (int t = 0; t < 30; ++t) {
    const Vec4 ydot = rng.cvector<4>();
    const Bivector4 r0 = rng.bivector();
    const Vec4 xdot = cd(0, 1) * (r0 * ydot);
    const GeneratorSolution gs = solve_point_to_generator(xdot, ydot);
    if (gs.rank != 3) p2g_rank = gs.rank;
    p2g = std::max(p2g, gs.residual);
    for (const auto& h : gs.homogeneous_basis) {
      p2g_kill = std::max(p2g_kill, (h * ydot).cwiseAbs().maxCoeff());
      p2g_simple = std::max(p2g_simple, std::abs(pfaffian(h)));
    }
    // the whole affine family keeps X = 0
    Bivector4 rf = gs.r_particular;
    for (int k = 0; k < 3; ++k) rf += cd(rng.normal(), rng.normal()) * gs.homogeneous_basis[k];
    p2g_family = std::max(p2g_family,
                          (cd(0, 1) * (rf * ydot) - xdot).cwiseAbs().maxCoeff());
  }
  rep.add("incidence_particular_solution", p2g, 1e-10);
  rep.add("homogeneous_annihilates_y", p2g_kill, 1e-12);
  rep.add("homogeneous_simple", p2g_simple, 1e-12);
  rep.add("family_keeps_x_zero", p2g_family, 1e-9);
  rep.add("incidence_rank_three", std::abs(p2g_rank - 3), 0.5);

  // generator -> point with the rank ladder
  double g2p = 0;
  int rank6 = 6, rank5 = 5, rank6b = 6, rank7 = 7;
  for (int t = 0; t < 20; ++t) {
    const Bivector4 rtrue = rng.bivector();
    std::array<TwistorPoint, 4> pairs;
    for (int i = 0; i < 4; ++i) {
      const Vec4 y = rng.cvector<4>();
      pairs[i] = {Vec4(cd(0, 1) * (rtrue * y)), y};
    }
    const PointSolution ps = solve_generator_to_point(pairs);
    g2p = std::max(g2p, max_abs(ps.r - rtrue) / max_abs(rtrue));
    if (ps.rank != 6) rank6 = ps.rank;
    if (incidence_rank({pairs[0], pairs[1]}) != 5) rank5 = -1;
    if (incidence_rank({pairs[0], pairs[1], pairs[2]}) != 6) rank6b = -1;
  }
  rep.add("generator_recovery", g2p, 1e-9);
  rep.add("four_pair_rank_six", std::abs(rank6 - 6), 0.5);
  rep.add("two_pair_rank_five", std::abs(rank5 - 5), 0.5);
  rep.add("three_pair_rank_six", std::abs(rank6b - 6), 0.5);

  // inverse correspondence: unknowns (X, Y), rank 7
  {
    const Bivector4 r1 = rng.bivector();
    const Vec4 ystar = rng.cvector<4>();
    const GeneratorSolution fam = solve_point_to_generator(Vec4(cd(0, 1) * (r1 * ystar)), ystar);
    const Bivector4 r2 = r1 + 0.7 * fam.homogeneous_basis[0];
    const Bivector4 r3 = r1 + 0.3 * fam.homogeneous_basis[1];
    const Bivector4 r4 = r1 - 0.2 * fam.homogeneous_basis[2] + 0.1 * fam.homogeneous_basis[0];
    Eigen::Matrix<cd, 16, 8> sys = Eigen::Matrix<cd, 16, 8>::Zero();
    int blk = 0;
    for (const Bivector4* rj : {&r2, &r3, &r4}) {
      sys.block<4, 4>(4 * blk, 4) = cd(0, 1) * (r1 - *rj);
      ++blk;
    }
    sys.block<4, 4>(12, 0) = -Mat4::Identity();
    sys.block<4, 4>(12, 4) = cd(0, 1) * r1;
    rank7 = rank_of(sys, 1e-10);
    rep.add("inverse_system_rank_seven", std::abs(rank7 - 7), 0.5);
  }

  // homogeneous coordinates
  double hres = 0, hquad = 0;
  for (int t = 0; t < 30; ++t) {
    const Bivector4 r = rng.bivector();
    const HomogeneousCoords hc = homogeneous_coords(n, r);
    hquad = std::max(hquad, std::abs(hc.nf));
    Mat8 eps_kl = Mat8::Zero();
    eps_kl.block<4, 4>(0, 4) = Mat4::Identity();
    eps_kl.block<4, 4>(4, 0) = Mat4::Identity();
    const Mat8 plow = eps_kl * hc.pair_form * eps_kl;
    const Mat8 rr = hc.pair_form * plow.transpose();
    // R^{AB} R_{CB} = 1/2 nf delta; on image points both sides vanish
    hres = std::max(hres, max_abs(rr - 0.5 * hc.nf * Mat8::Identity()) /
                              std::max(1.0, max_abs(hc.pair_form)));
    // paraboloid relation pf = -(U - iS)/(U + iS), U,S read from the two extra slots
    const cd r15 = hc.coords(6), r51 = hc.coords(7);
    const cd s = (r51 + 2.0 * r15) / 2.0;
    const cd u = (2.0 * r15 - r51) / cd(0, 2);
    hquad = std::max(hquad, std::abs(pfaffian(r) + (u - cd(0, 1) * s) / (u + cd(0, 1) * s)));
  }
  rep.add("pair_form_contraction", hres, 1e-10);
  rep.add("paraboloid_consistency", hquad, 1e-10);

  // eta8 invariants
  const EtaSet8 e8 = build_eta8();
  {
    double r_cliff = 0;
    for (int A = 0; A < 8; ++A)
      for (int B = 0; B < 8; ++B) {
        // eta_{AK}^R = eta[A](K,M) eps^{MR}; eta_B^L_R = eps^{LM} eta[B](M,R)
        const Mat8 akr = e8.eta[A] * e8.eps_kl;
        const Mat8 blr = e8.eps_kl * e8.eta[B];
        const Mat8 akr2 = e8.eta[B] * e8.eps_kl;
        const Mat8 blr2 = e8.eps_kl * e8.eta[A];
        const Mat8 lhs = akr * blr.transpose() + akr2 * blr2.transpose();
        r_cliff = std::max(r_cliff, max_abs(lhs - (A == B ? 1.0 : 0.0) * Mat8::Identity()));
      }
    rep.add("reduced_clifford", r_cliff, 1e-12);

    double r_metric = 0;
    for (int A = 0; A < 8; ++A)
      for (int B = 0; B < 8; ++B)
        r_metric = std::max(r_metric, std::abs(0.25 * (e8.eta_up[A].cwiseProduct(e8.eta[B])).sum() -
                                       (A == B ? 1.0 : 0.0)));
    rep.add("metric_reproduction_8", r_metric, 1e-12);

    // pair-metric identities through the stored eps_{PQRT}
    double r_pair4 = 0, r_pair2 = 0, r_sympart = 0;
    // eps_{PQ} = 1/4 eps_{PQRT} eps^{RT}
    for (int P = 0; P < 8; ++P)
      for (int Q = 0; Q < 8; ++Q) {
        cd acc = 0;
        for (int R = 0; R < 8; ++R)
          for (int T = 0; T < 8; ++T) acc += e8.eps_klmn({P, Q, R, T}) * e8.eps_kl(R, T);
        r_pair2 = std::max(r_pair2, std::abs(0.25 * acc - e8.eps_kl(P, Q)));
      }
    // eps_{STPQ} = 1/4 eps_{ST}^{KR} eps_{PQKR}
    {
      auto sw = [](int k) { return k < 4 ? k + 4 : k - 4; };
      for (int S = 0; S < 8; ++S)
        for (int T = 0; T < 8; ++T)
          for (int P = 0; P < 8; ++P)
            for (int Q = 0; Q < 8; ++Q) {
              cd acc = 0;
              for (int K = 0; K < 8; ++K)
                for (int R = 0; R < 8; ++R)
                  acc += e8.eps_klmn({S, T, sw(K), sw(R)}) * e8.eps_klmn({P, Q, K, R});
              r_pair4 = std::max(r_pair4, std::abs(0.25 * acc - e8.eps_klmn({S, T, P, Q})));
            }
    }
    rep.add("pair_metric_idempotent", r_pair4, 1e-12);
    rep.add("pair_metric_trace", r_pair2, 1e-12);

    // symmetric part of each raised block is 1/8 (eta . eps) eps^{MN}
    for (int A = 0; A < 8; ++A) {
      const Mat8 symp = 0.5 * (e8.eta_up[A] + e8.eta_up[A].transpose());
      const cd coef = 0.125 * (e8.eta_up[A].cwiseProduct(e8.eps_kl)).sum();
      r_sympart = std::max(r_sympart, max_abs(symp - coef * e8.eps_kl));
    }
    rep.add("symmetric_part_law", r_sympart, 1e-12);

    rep.add("involution_block_form",
            max_abs(e8.involution - e8.eps_kl), 1e-14);
    rep.add("involution_squares", max_abs(e8.involution * e8.involution - Mat8::Identity()),
            1e-14);
    rep.add("s_tilde_unit_det", std::abs(e8.s_tilde.determinant() - cd(1)), 1e-12);
    double r_isom = 0;
    const Mat8 st = e8.s_tilde;
    r_isom = max_abs(st * e8.eps_kl * st.transpose() - Mat8::Identity());
    rep.add("s_tilde_isometry", r_isom, 1e-12);
  }

  // family test
  {
    std::array<Twistor2Vector, 4> u0, v0, mix;
    for (int i = 0; i < 4; ++i) {
      Vec8 a = Vec8::Zero(), b = Vec8::Zero();
      a(4 + i) = 1;
      b(i) = 1;
      u0[i].v = a;
      v0[i].v = b;
    }
    mix[0].v = Vec8::Zero(); mix[0].v(0) = 1;
    for (int i = 1; i < 4; ++i) { mix[i].v = Vec8::Zero(); mix[i].v(4 + i) = 1; }
    rep.add("family_canonical_is_I", std::abs(family_test(e8, u0) - 1), 0.5);
    // the S_A^M image of the canonical generator stays in family I: S has
    // determinant +1, so it cannot swap the families
    std::array<Twistor2Vector, 4> img;
    for (int i = 0; i < 4; ++i) img[i].v = e8.involution * u0[i].v.conjugate();
    rep.add("family_involution_image_is_I", std::abs(family_test(e8, img) - 1), 0.5);
    rep.add("family_control_is_II", std::abs(family_test(e8, mix) + 1), 0.5);
    // a generic solution-family generator is family I
    const Bivector4 r = rng.bivector();
    std::array<Twistor2Vector, 4> gen;
    for (int i = 0; i < 4; ++i) {
      Vec4 y = Vec4::Unit(i);
      gen[i] = Twistor2Vector::from_parts(Vec4(cd(0, 1) * (r * y)), y);
    }
    rep.add("family_solution_generator_is_I", std::abs(family_test(e8, gen) - 1), 0.5);
  }

  // octonion algebra
  {
    const OctonionTable tab = build_octonion_table(e8);
    double unit = 0, comp = 0, alt = 0;
    for (int t = 0; t < samples; ++t) {
      const Vec8 x = rng.cvector<8>(), y = rng.cvector<8>();
      unit = std::max(unit, (tab.multiply(tab.identity, x) - x).cwiseAbs().maxCoeff());
      unit = std::max(unit, (tab.multiply(x, tab.identity) - x).cwiseAbs().maxCoeff());
      const Vec8 xy = tab.multiply(x, y);
      const cd nx = (x.transpose() * x)(0), ny = (y.transpose() * y)(0);
      comp = std::max(comp, std::abs((xy.transpose() * xy)(0) - nx * ny) / std::abs(nx * ny));
      alt = std::max(alt, (tab.multiply(tab.multiply(x, x), y) -
                           tab.multiply(x, tab.multiply(x, y))).cwiseAbs().maxCoeff());
      alt = std::max(alt, (tab.multiply(tab.multiply(y, x), x) -
                           tab.multiply(y, tab.multiply(x, x))).cwiseAbs().maxCoeff());
    }
    rep.add("octonion_unit_law", unit, 1e-10);
    rep.add("octonion_composition", comp, 1e-9);
    rep.add("octonion_alternativity", alt, 1e-9);
    double assoc = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) {
          const Vec8 ei = Vec8::Unit(i), ej = Vec8::Unit(j), ek = Vec8::Unit(k);
          assoc = std::max(assoc, (tab.multiply(tab.multiply(ei, ej), ek) -
                                   tab.multiply(ei, tab.multiply(ej, ek)))
                                      .cwiseAbs()
                                      .maxCoeff());
        }
    // non-associativity control: residual passes when the associator is LARGE
    rep.add("octonion_nonassociative_control", assoc > 0.1 ? 0.0 : 1.0, 0.5);
  }

  // klein slice
  {
    double red = 0, rec = 0, deg = 0;
    for (int t = 0; t < 20; ++t) {
      const Mat2 m = rng.cmatrix<2>();
      const Vec2 pi = rng.cvector<2>();
      const KleinReport kr = klein_slice(pi, m);
      red = std::max(red, kr.redundancy_residual);
      rec = std::max(rec, kr.recovery_residual);
    }
    const KleinReport kr0 = klein_slice(Vec2::Zero(), Mat2(rng.cmatrix<2>()));
    deg = std::max(kr0.redundancy_residual, kr0.recovery_residual);
    rep.add("klein_redundancy", red, 1e-10);
    rep.add("klein_pair_recovery", rec, 1e-9);
    rep.add("klein_degenerate_pi_zero", deg, 1e-12);
  }

  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hexaspinor
