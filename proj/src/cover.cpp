#include <hexaspinor/cover.hpp>

#include <chrono>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include <hexaspinor/rng.hpp>

namespace hexaspinor {

namespace {

double max_abs(const MatX& m) { return m.cwiseAbs().maxCoeff(); }

Mat4 random_sl4(Rng& rng) {
  Mat4 m = rng.cmatrix<4>();
  const cd det = m.determinant();
  return m / std::pow(det, 0.25);
}

}  // namespace

double orthogonality_residual(const NordenSet& n, const OrthoTransform& k) {
  return max_abs(k * n.metric_g * k.transpose() - n.metric_g);
}

OrthoTransform push(const NordenSet& n, const SpinTransform& s, double tol) {
  if (std::abs(s.determinant() - cd(1)) > tol)
    throw input_error("push: det S must be 1 within tolerance");
  Mat6 k;
  for (int al = 0; al < 6; ++al) {
    const Mat4 m = s.transpose() * n.eta_up[al] * s;
    for (int be = 0; be < 6; ++be) k(al, be) = 0.5 * (m.cwiseProduct(n.eta_dn[be])).sum();
  }
  return k;
}

bool is_special(const NordenSet& n, const OrthoTransform& k, double tol) {
  if (orthogonality_residual(n, k) > tol) throw input_error("is_special: K is not orthogonal");
  const cd det = k.determinant();
  if (std::abs(det - cd(1)) <= tol) return true;
  if (std::abs(det + cd(1)) <= tol) return false;
  throw numeric_error("is_special: det K is not close to +-1");
}

SpinTransform canonical_sign(const SpinTransform& s) {
  // locate the entry of largest magnitude, ties by smallest flat index
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(s(i, j)) > best) {
        best = std::abs(s(i, j));
        bi = i; bj = j;
      }
  const cd z = s(bi, bj);
  const bool keep = (z.real() > 0.0) || (z.real() == 0.0 && z.imag() > 0.0);
  return keep ? s : SpinTransform(-s);
}

LiftResult lift(const NordenSet& n, const OrthoTransform& k, double tol) {
  if (orthogonality_residual(n, k) > tol) throw input_error("lift: K is not orthogonal");
  if (!is_special(n, k, tol)) throw input_error("lift: K is not special (det K = -1 branch)");

  // bivector images of the transformed basis operators
  std::array<Mat4, 6> m;
  for (int al = 0; al < 6; ++al) {
    m[al] = Mat4::Zero();
    for (int be = 0; be < 6; ++be) m[al] += k(al, be) * n.eta_up[be];
  }

  // X = S^T intertwines: (M_al M_be^-1) X = X (eta_al eta_be^-1) for all pairs;
  // stack as rows of a homogeneous system over the 16 entries of X (row-major).
  Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic> sys(16 * 30, 16);
  int row_block = 0;
  for (int al = 0; al < 6; ++al)
    for (int be = 0; be < 6; ++be) {
      if (al == be) continue;
      const Mat4 g4 = n.eta_up[al] * n.eta_up[be].inverse();
      const Mat4 h4 = m[al] * m[be].inverse();
      // vec(H X) = (H kron I) vec(X); vec(X G) = (I kron G^T) vec(X)
      for (int i = 0; i < 4; ++i)
        for (int p = 0; p < 4; ++p)
          for (int j = 0; j < 4; ++j)
            for (int q = 0; q < 4; ++q)
              sys(row_block * 16 + i * 4 + j, p * 4 + q) =
                  h4(i, p) * (j == q ? 1.0 : 0.0) - (i == p ? 1.0 : 0.0) * g4(q, j);
      ++row_block;
    }

  Eigen::JacobiSVD<MatX> svd(sys, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  int ns = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < 1e-8 * sv(0)) ++ns;
  if (ns != 1)
    throw numeric_error("lift: intertwiner space dimension is " + std::to_string(ns) +
                        ", expected 1");

  VecX null = svd.matrixV().col(15);
  Mat4 x;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) x(i, j) = null(i * 4 + j);
  SpinTransform s = x.transpose();
  s /= std::pow(s.determinant(), 0.25);
  // push(c S) = c^2 push(S): resolve the i-ambiguity left by det = 1
  if (max_abs(push(n, s, tol) - k) > max_abs(push(n, s, tol) + k)) s *= cd(0, 1);
  s = canonical_sign(s);

  LiftResult out;
  out.s = s;
  out.nullspace_dim = ns;
  out.residual = max_abs(push(n, s, tol) - k);
  if (out.residual > tol)
    throw numeric_error("lift: residual " + std::to_string(out.residual) + " above tolerance");
  return out;
}

Mat6 push_infinitesimal(const NordenSet& n, const Mat4& t, double tol) {
  if (std::abs(t.trace()) > tol) throw input_error("push_infinitesimal: nonzero trace");
  const AOperators a = build_a_operators(n);
  return push_traceless_matrix(a, t);
}

Report cover_suite(const NordenSet& n, std::uint64_t seed, int samples) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "cover";
  Rng rng(seed);
  const CTensor el = n.eps4.lower();

  double hom = 0, orth = 0, detr = 0, kern = 0, rt = 0, eps_inv = 0;
  for (int t = 0; t < samples; ++t) {
    const Mat4 s1 = random_sl4(rng), s2 = random_sl4(rng);
    const Mat6 k1 = push(n, s1), k2 = push(n, s2);
    hom = std::max(hom, (push(n, Mat4(s1 * s2)) - k1 * k2).cwiseAbs().maxCoeff());
    orth = std::max(orth, orthogonality_residual(n, k1));
    detr = std::max(detr, std::abs(k1.determinant() - cd(1)));
    kern = std::max(kern, (push(n, Mat4(-s1)) - k1).cwiseAbs().maxCoeff());
    if (t < 20) {
      const LiftResult lr = lift(n, k1);
      rt = std::max(rt, std::min((lr.s - s1).cwiseAbs().maxCoeff(),
                                 (lr.s + s1).cwiseAbs().maxCoeff()));
    }
    if (t < 20) {
      // quartic epsilon invariance of unimodular transforms
      double r = 0;
      for (int x = 0; x < 4; ++x)
        for (int x1 = 0; x1 < 4; ++x1)
          for (int y = 0; y < 4; ++y)
            for (int y1 = 0; y1 < 4; ++y1) {
              cd acc = 0;
              for (int b = 0; b < 4; ++b)
                for (int b1 = 0; b1 < 4; ++b1)
                  for (int d = 0; d < 4; ++d)
                    for (int d1 = 0; d1 < 4; ++d1)
                      acc += s1(x, b) * s1(x1, b1) * s1(y, d) * s1(y1, d1) * el({b, b1, d, d1});
              r = std::max(r, std::abs(acc - el({x, x1, y, y1})));
            }
      eps_inv = std::max(eps_inv, r);
    }
  }
  rep.add("push_homomorphism", hom, 1e-9);
  rep.add("push_orthogonality", orth, 1e-10);
  rep.add("push_determinant_one", detr, 1e-10);
  rep.add("push_kernel_plus_minus", kern, 1e-14);
  rep.add("lift_roundtrip", rt, 1e-8);
  rep.add("epsilon_invariance", eps_inv, 1e-9);

  // identity and -identity
  rep.add("push_identity", (push(n, Mat4(Mat4::Identity())) - Mat6::Identity()).cwiseAbs().maxCoeff(),
          1e-14);

  // derivative of push at the identity vs the A-operator image
  {
    Mat4 t = rng.cmatrix<4>();
    t -= (t.trace() / 4.0) * Mat4::Identity();
    const double h = 1e-5;
    const Mat4 ep = (h * t).exp(), em = (-h * t).exp();
    const Mat6 dk = (push(n, Mat4(ep / std::pow(ep.determinant(), 0.25))) -
                     push(n, Mat4(em / std::pow(em.determinant(), 0.25)))) /
                    (2 * h);
    const Mat6 tab = push_infinitesimal(n, t);
    const Mat6 tmix = tab * n.metric_g_inv;  // T_al{}^be = g^{be ga} T_{al ga}
    rep.add("infinitesimal_derivative_consistency", (dk - tmix).cwiseAbs().maxCoeff(), 1e-6);
    rep.add("infinitesimal_antisymmetry", (tab + tab.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }

  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hexaspinor
