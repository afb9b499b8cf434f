#include <hexaspinor/realforms.hpp>

#include <chrono>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include <hexaspinor/cover.hpp>
#include <hexaspinor/rng.hpp>

namespace hexaspinor {

namespace {

double max_abs(const MatX& m) { return m.cwiseAbs().maxCoeff(); }

Mat6 diag6(std::initializer_list<cd> v) {
  Mat6 m = Mat6::Zero();
  int k = 0;
  for (cd x : v) m(k, k) = x, ++k;
  return m;
}

Mat4 pair_lower(const NordenSet& n, const Mat4& r) { return lower_bivector(n, r); }

}  // namespace

std::array<Mat4, 6> complex_frame_operators(const NordenSet& n) {
  const cd mi(0, -1);
  std::array<Mat4, 6> out = n.eta_up;
  for (int al = 2; al < 6; ++al) out[al] = mi * out[al];
  return out;
}

RealFormData build_real_form(const NordenSet& n, int p, int q) {
  (void)n;  // the tables are fixed in the special frame
  const cd i(0, 1), one(1, 0);
  RealFormData rf;
  rf.p = p;
  rf.q = q;
  if (p == 6 && q == 0) {
    rf.h = Mat6::Identity();
    rf.s_kind = SKind::polarity;
    rf.s = Mat4::Identity();
  } else if (p == 1 && q == 5) {
    rf.h = diag6({i, one, i, i, i, i});
    rf.s_kind = SKind::involution;
    rf.s << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
  } else if (p == 2 && q == 4) {
    rf.h = diag6({one, one, i, i, i, i});
    rf.s_kind = SKind::polarity;
    rf.s << 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0;
  } else if (p == 3 && q == 3) {
    rf.h = diag6({i, one, i, one, i, one});
    rf.s_kind = SKind::involution;
    rf.s = Mat4::Identity();
  } else {
    throw input_error("build_real_form: unsupported signature (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  }
  rf.h_inv = rf.h.inverse();
  rf.involution = rf.h * rf.h.conjugate().inverse();
  const Mat6 gij = rf.h * rf.h.transpose();  // ambient complex-frame metric is the identity
  if (gij.imag().cwiseAbs().maxCoeff() > 1e-14)
    throw numeric_error("build_real_form: induced metric is not real");
  rf.induced_metric = gij.real();
  return rf;
}

Mat6 involution_from_s(const NordenSet& n, const RealFormData& rf) {
  const std::array<Mat4, 6> up = complex_frame_operators(n);
  std::array<Mat4, 6> dn;  // complex-frame down table: pair lowering only (g = I)
  for (int al = 0; al < 6; ++al) dn[al] = pair_lower(n, up[al]);

  Mat6 s6 = Mat6::Zero();
  if (rf.s_kind == SKind::involution) {
    // S_al^{be'} = 1/4 eta_al^{ab} conj(eta^be)_{c'd'} 2 s_a^{c'} s_b^{d'}
    for (int al = 0; al < 6; ++al)
      for (int be = 0; be < 6; ++be) {
        cd acc = 0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
              for (int d = 0; d < 4; ++d)
                acc += up[al](a, b) * std::conj(dn[be](c, d)) * rf.s(a, c) * rf.s(b, d);
        s6(al, be) = 0.5 * acc;
      }
  } else {
    // S_al^{be'} = 1/4 eta_al^{ab} conj(eta^be)_{c'd'} s^{kc'} s^{nd'} eps_{knab}
    const Mat4 sup = rf.s.inverse().transpose();
    const CTensor el = n.eps4.lower();
    for (int al = 0; al < 6; ++al)
      for (int be = 0; be < 6; ++be) {
        cd acc = 0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
              for (int d = 0; d < 4; ++d)
                for (int k = 0; k < 4; ++k)
                  for (int m = 0; m < 4; ++m)
                    acc += up[al](a, b) * std::conj(dn[be](c, d)) * sup(k, c) * sup(m, d) *
                           el({k, m, a, b});
        s6(al, be) = 0.25 * acc;
      }
  }
  if (max_abs(s6 - rf.involution) > 1e-10)
    throw numeric_error("involution_from_s: branch formula does not reproduce the involution");
  return s6;
}

bool is_real_vector(const RealFormData& rf, const Vec6& v, double tol) {
  const Vec6 lhs = rf.involution.transpose() * v;  // S_al^{be} v^al
  return (lhs - v.conjugate()).cwiseAbs().maxCoeff() <=
         tol * std::max(1.0, v.cwiseAbs().maxCoeff());
}

cd reality_pairing(const RealFormData& rf, const Vec4& x, const Vec4& y) {
  return (x.transpose() * rf.s * y.conjugate())(0);
}

bool bivector_reality_check(const RealFormData& rf, const Vec4& x, const Vec4& y, double tol) {
  const double scale = std::max(1.0, std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()));
  return std::abs(reality_pairing(rf, x, x)) <= tol * scale &&
         std::abs(reality_pairing(rf, y, y)) <= tol * scale &&
         std::abs(reality_pairing(rf, x, y)) <= tol * scale;
}

Report realform_suite(const NordenSet& n, std::uint64_t seed, int samples) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "realform";
  Rng rng(seed);

  const std::array<Mat4, 6> up = complex_frame_operators(n);

  const int sigs[4][2] = {{6, 0}, {1, 5}, {2, 4}, {3, 3}};
  for (auto [p, q] : sigs) {
    const RealFormData rf = build_real_form(n, p, q);
    const std::string tag = std::to_string(p) + std::to_string(q);

    rep.add("h_inverse_" + tag, max_abs(rf.h_inv * rf.h - Mat6::Identity()), 1e-12);
    // S conj(S) = I and S S^T = I with ambient metric the identity
    rep.add("involution_squares_" + tag,
            max_abs(rf.involution * rf.involution.conjugate() - Mat6::Identity()), 1e-12);
    rep.add("involution_orthogonal_" + tag,
            max_abs(rf.involution * rf.involution.transpose() - Mat6::Identity()), 1e-12);

    // induced metric signature
    int plus = 0, minus = 0;
    double offdiag = 0;
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b)
        if (a != b) offdiag = std::max(offdiag, std::abs(rf.induced_metric(a, b)));
      if (rf.induced_metric(a, a) > 0) ++plus; else ++minus;
    }
    rep.add("induced_metric_diagonal_" + tag, offdiag, 1e-12);
    rep.add("induced_metric_signature_" + tag,
            std::abs(plus - p) + std::abs(minus - q), 0.5);

    // s branch law: even q -> s_{ab'} = conj(s_{b'a}); odd q -> s conj(s) = +-I
    if (rf.s_kind == SKind::polarity) {
      rep.add("polarity_hermitian_" + tag,
              max_abs(rf.s - rf.s.adjoint()), 1e-12);
    } else {
      const Mat4 ss = rf.s * rf.s.conjugate();
      const double rp = max_abs(ss - Mat4::Identity());
      const double rm = max_abs(ss + Mat4::Identity());
      rep.add("reality_structure_squares_" + tag, std::min(rp, rm), 1e-12);
    }

    // Summary branch formula reproduces the involution
    double inv_res = 0;
    try {
      involution_from_s(n, rf);
    } catch (const numeric_error&) {
      inv_res = 1;
    }
    rep.add("involution_from_s_" + tag, inv_res, 0.5);

    // conjugation covariance of the transported operators
    {
      std::array<Mat4, 6> eta_i;
      for (int ii = 0; ii < 6; ++ii) {
        eta_i[ii] = Mat4::Zero();
        for (int al = 0; al < 6; ++al) eta_i[ii] += rf.h(ii, al) * up[al];
      }
      double r = 0;
      if (rf.s_kind == SKind::involution) {
        // I: conj(eta_i)^{a'b'} = eta_i^{cd} s_c^{a'} s_d^{b'}
        for (int ii = 0; ii < 6; ++ii)
          r = std::max(r, max_abs(eta_i[ii].conjugate() -
                                  Mat4(rf.s.transpose() * eta_i[ii] * rf.s)));
      } else {
        // II: conj(eta_i)^{a'b'} = eta_{i cd} s^{ca'} s^{db'}
        const Mat4 sup = rf.s.inverse().transpose();
        for (int ii = 0; ii < 6; ++ii) {
          const Mat4 lowed = pair_lower(n, eta_i[ii]);
          r = std::max(r, max_abs(eta_i[ii].conjugate() -
                                  Mat4(sup.transpose() * lowed * sup)));
        }
      }
      rep.add("conjugation_covariance_" + tag, r, 1e-10);
    }
  }

  // (2,4)-specific checks
  {
    const RealFormData rf = build_real_form(n, 2, 4);
    // pushforward reality: v = H u for real u
    double r = 0;
    for (int t = 0; t < samples; ++t) {
      Vec6 u;
      for (int kk = 0; kk < 6; ++kk) u(kk) = rng.normal();
      const Vec6 v = rf.h.transpose() * u;  // v^al = H_i^al u^i
      if (!is_real_vector(rf, v)) r = 1;
    }
    rep.add("pushforward_real_24", r, 0.5);

    // stabilizer sandwich: real K in the operator frame, N = +- delta
    double worst = 0;
    const Mat4 sup = rf.s.inverse().transpose();
    for (int t = 0; t < samples; ++t) {
      Mat6 b = Mat6::Zero();
      for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) {
          b(x, y) = 0.45 * rng.normal();
          b(y, x) = -b(x, y);
        }
      const Mat6 gen = n.metric_g_inv.real() * b;
      const Mat6 k = gen.exp();
      const LiftResult lr = lift(n, k);
      // N_c^l = s^{lk'} conj(S)_{k'}^{m'} s_{am'} S_c^a
      Mat4 nmat = Mat4::Zero();
      for (int c = 0; c < 4; ++c)
        for (int l = 0; l < 4; ++l) {
          cd acc = 0;
          for (int a = 0; a < 4; ++a)
            for (int kk = 0; kk < 4; ++kk)
              for (int mm = 0; mm < 4; ++mm)
                acc += sup(l, kk) * std::conj(lr.s(kk, mm)) * rf.s(a, mm) * lr.s(c, a);
          nmat(c, l) = acc;
        }
      const double rp = max_abs(nmat - Mat4::Identity());
      const double rm = max_abs(nmat + Mat4::Identity());
      worst = std::max(worst, std::min(rp, rm));
    }
    rep.add("stabilizer_check_24", worst, 1e-9);

    // for real tangent bivectors the pfaffian is T^2+V^2-W^2-X^2-Y^2-Z^2
    // and in particular real; the norden frame is the (2,4) real frame.
    double pfres = 0;
    for (int t = 0; t < samples; ++t) {
      Vec6 u;
      for (int kk = 0; kk < 6; ++kk) u(kk) = rng.normal();
      const Mat4 w = vector_to_bivector(n, u);
      const Mat4 wl = lower_bivector(n, w);
      const cd pf = 0.5 * (w.cwiseProduct(wl)).sum();
      const cd quad = u(0) * u(0) + u(1) * u(1) - u(2) * u(2) - u(3) * u(3) - u(4) * u(4) -
                      u(5) * u(5);
      pfres = std::max(pfres, std::abs(pf - quad));
      pfres = std::max(pfres, std::abs(pf.imag()));
    }
    rep.add("pfaffian_reality_24", pfres, 1e-10);
    // canonical basis spinor pair passes the reality check and maps to a real
    // isotropic vector
    {
      const Vec4 x = Vec4::Unit(0), y = Vec4::Unit(1);
      double r = bivector_reality_check(rf, x, y) ? 0.0 : 1.0;
      const Mat4 w = x * y.transpose() - y * x.transpose();
      const Vec6 v = bivector_to_vector(n, w);
      if (v.imag().cwiseAbs().maxCoeff() > 1e-12) r = 1.0;  // real frame components
      rep.add("canonical_pair_real_24", r, 0.5);
    }
  }

  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hexaspinor
