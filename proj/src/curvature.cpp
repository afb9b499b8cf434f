#include <hexaspinor/curvature.hpp>

#include <chrono>
#include <cmath>

#include <hexaspinor/rng.hpp>

namespace hexaspinor {

namespace {

// symmetrize / antisymmetrize over the lower pair (slots 0,2) and the upper
// pair (slots 1,3) of a [c][d][s][r] tensor
CTensor pair_sym(const CTensor& x, double sign) {
  CTensor out({4, 4, 4, 4});
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r)
          out({c, d, s, r}) = 0.25 * (x({c, d, s, r}) + sign * x({s, d, c, r}) +
                                      sign * x({c, r, s, d}) + x({s, r, c, d}));
  return out;
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

AlgCurvature6 random_alg_curvature(std::uint64_t seed, int terms) {
  if (terms < 1) throw input_error("random_alg_curvature: terms must be >= 1");
  Rng rng(seed);
  AlgCurvature6 out({6, 6, 6, 6});
  for (int t = 0; t < terms; ++t) {
    Mat6 h = rng.cmatrix<6>(), k = rng.cmatrix<6>();
    h = 0.5 * (h + h.transpose()).eval();
    k = 0.5 * (k + k.transpose()).eval();
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          for (int d = 0; d < 6; ++d)
            out({a, b, c, d}) += h(a, c) * k(b, d) + h(b, d) * k(a, c) - h(a, d) * k(b, c) -
                                 h(b, c) * k(a, d);
  }
  return out;
}

double curvature_symmetry_residual(const AlgCurvature6& r) {
  double m = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d) {
          m = std::max(m, std::abs(r({a, b, c, d}) + r({b, a, c, d})));
          m = std::max(m, std::abs(r({a, b, c, d}) + r({a, b, d, c})));
          m = std::max(m, std::abs(r({a, b, c, d}) - r({c, d, a, b})));
        }
  return m;
}

double bianchi_tensor_residual(const AlgCurvature6& r) {
  double m = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d)
          m = std::max(m, std::abs(r({a, b, c, d}) + r({a, d, b, c}) + r({a, c, d, b})));
  return m;
}

CurvatureSpinTensor tensor_to_spintensor(const NordenSet& n, const AlgCurvature6& r) {
  if (r.shape() != std::vector<int>{6, 6, 6, 6})
    throw input_error("tensor_to_spintensor: expected shape 6x6x6x6");
  if (curvature_symmetry_residual(r) > 1e-8 * std::max(1.0, r.max_abs()))
    throw input_error("tensor_to_spintensor: input violates the curvature symmetries");

  // raise Greek slots 2 and 4: R_al{}^be{}_ga{}^de
  CTensor rm({6, 6, 6, 6});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d) {
          cd acc = 0;
          for (int bb = 0; bb < 6; ++bb)
            for (int dd = 0; dd < 6; ++dd)
              acc += n.metric_g_inv(b, bb) * n.metric_g_inv(d, dd) * r({a, bb, c, dd});
          rm({a, b, c, d}) = acc;
        }

  // R_c^d_s^r = 1/4 sum_{k,t} eta^al_{ck} eta_be^{dk} eta^ga_{st} eta_de^{rt} R_al^be_ga^de
  CurvatureSpinTensor out({4, 4, 4, 4});
  // stage through 4x4x6x6 intermediates to keep the contraction cheap
  CTensor half({4, 4, 6, 6});
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int ga = 0; ga < 6; ++ga)
        for (int de = 0; de < 6; ++de) {
          cd acc = 0;
          for (int al = 0; al < 6; ++al)
            for (int be = 0; be < 6; ++be) {
              cd hook = 0;
              for (int k = 0; k < 4; ++k) hook += n.eta_dn[al](c, k) * n.eta_up[be](d, k);
              acc += hook * rm({al, be, ga, de});
            }
          half({c, d, ga, de}) = acc;
        }
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int s = 0; s < 4; ++s)
        for (int rr = 0; rr < 4; ++rr) {
          cd acc = 0;
          for (int ga = 0; ga < 6; ++ga)
            for (int de = 0; de < 6; ++de) {
              cd hook = 0;
              for (int t = 0; t < 4; ++t) hook += n.eta_dn[ga](s, t) * n.eta_up[de](rr, t);
              acc += hook * half({c, d, ga, de});
            }
          out({c, d, s, rr}) = 0.25 * acc;
        }
  return out;
}

AlgCurvature6 spintensor_to_tensor(const NordenSet& n, const CurvatureSpinTensor& rs) {
  const AOperators a = build_a_operators(n);
  AlgCurvature6 out({6, 6, 6, 6});
  for (int al = 0; al < 6; ++al)
    for (int be = 0; be < 6; ++be)
      for (int ga = 0; ga < 6; ++ga)
        for (int de = 0; de < 6; ++de) {
          cd acc = 0;
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
              for (int s = 0; s < 4; ++s)
                for (int rr = 0; rr < 4; ++rr)
                  acc += a.a_low[al][be](d, c) * a.a_low[ga][de](rr, s) * rs({c, d, s, rr});
          out({al, be, ga, de}) = acc;
        }
  return out;
}

cd scalar_curvature(const CurvatureSpinTensor& rs) {
  cd acc = 0;
  for (int k = 0; k < 4; ++k)
    for (int r = 0; r < 4; ++r) acc += rs({k, r, r, k});
  return -2.0 * acc;
}

Mat6 ricci_from_tensor(const NordenSet& n, const AlgCurvature6& r) {
  Mat6 ric = Mat6::Zero();
  for (int b = 0; b < 6; ++b)
    for (int d = 0; d < 6; ++d) {
      cd acc = 0;
      for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) acc += n.metric_g_inv(a, c) * r({a, b, c, d});
      ric(b, d) = acc;
    }
  return ric;
}

Mat6 ricci_from_ricci_part(const NordenSet& n, const CTensor& p) {
  // R_{be de} = 1/4 eta_be^{cs} eta_{de rd} P_{cs}^{rd};  P stored [c][s][d][r]
  std::array<Mat4, 6> low;
  for (int al = 0; al < 6; ++al) low[al] = lower_bivector(n, n.eta_up[al]);
  Mat6 ric = Mat6::Zero();
  for (int be = 0; be < 6; ++be)
    for (int de = 0; de < 6; ++de) {
      cd acc = 0;
      for (int c = 0; c < 4; ++c)
        for (int s = 0; s < 4; ++s)
          for (int r = 0; r < 4; ++r)
            for (int d = 0; d < 4; ++d)
              acc += n.eta_up[be](c, s) * low[de](r, d) * p({c, s, r, d});
      ric(be, de) = 0.25 * acc;
    }
  return ric;
}

CurvatureDecomposition decompose(const NordenSet& n, const CurvatureSpinTensor& rs) {
  (void)n;
  if (rs.shape() != std::vector<int>{4, 4, 4, 4})
    throw input_error("decompose: expected shape 4x4x4x4");
  {
    double sym = 0, tr = 0;
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        for (int s = 0; s < 4; ++s)
          for (int r = 0; r < 4; ++r)
            sym = std::max(sym, std::abs(rs({c, d, s, r}) - rs({s, r, c, d})));
        cd acc = 0;
        for (int k = 0; k < 4; ++k) acc += rs({k, k, c, d});
        tr = std::max(tr, std::abs(acc));
      }
    if (std::max(sym, tr) > 1e-8 * std::max(1.0, rs.max_abs()))
      throw input_error("decompose: input violates the spin-tensor invariants");
  }

  const cd rscal = scalar_curvature(rs);
  CurvatureDecomposition out;
  out.scalar = rscal;

  // C = sym(Rs) + R/80 (D1 + D2)
  out.weyl = pair_sym(rs, +1.0);
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r)
          out.weyl({c, d, s, r}) += (rscal / 80.0) * (delta(s, d) * delta(c, r) +
                                                      delta(c, d) * delta(s, r));

  // P = -4 asym(Rs) - R/4 (D1 - D2), relabelled to [c][s][d][r]
  const CTensor asym = pair_sym(rs, -1.0);
  CTensor p({4, 4, 4, 4});
  for (int c = 0; c < 4; ++c)
    for (int s = 0; s < 4; ++s)
      for (int d = 0; d < 4; ++d)
        for (int r = 0; r < 4; ++r)
          p({c, s, d, r}) = -4.0 * asym({c, d, s, r}) -
                            (rscal / 4.0) * (delta(s, d) * delta(c, r) - delta(s, r) * delta(c, d));
  out.ricci_part = p;
  return out;
}

CurvatureSpinTensor recompose(const CurvatureDecomposition& d) {
  CurvatureSpinTensor rs({4, 4, 4, 4});
  const cd rscal = d.scalar;
  for (int c = 0; c < 4; ++c)
    for (int dd = 0; dd < 4; ++dd)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r) {
          const cd scal_part = (rscal / 40.0) * (3.0 * delta(s, dd) * delta(c, r) -
                                                 2.0 * delta(s, r) * delta(c, dd));
          rs({c, dd, s, r}) =
              d.weyl({c, dd, s, r}) - 0.25 * d.ricci_part({c, s, dd, r}) - scal_part;
        }
  return rs;
}

double bianchi_residual(const CurvatureSpinTensor& rs) {
  const cd rscal = scalar_curvature(rs);
  double m = 0;
  for (int d = 0; d < 4; ++d)
    for (int s = 0; s < 4; ++s) {
      cd acc = 0;
      for (int l = 0; l < 4; ++l) acc += rs({l, d, s, l});
      m = std::max(m, std::abs(acc + 0.125 * rscal * delta(s, d)));
    }
  return m;
}

bool spintensor_reality(const RealFormData& rf, const CurvatureSpinTensor& rs, double tol) {
  const double scale = std::max(1.0, rs.max_abs());
  if (rf.s_kind == SKind::polarity) {
    // polarity branch: M_{ab'cd'} = R_a^k_c^l s_{kb'} s_{ld'};  M = conj(M swapped)
    CTensor m({4, 4, 4, 4});
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            cd acc = 0;
            for (int k = 0; k < 4; ++k)
              for (int l = 0; l < 4; ++l) acc += rs({a, k, c, l}) * rf.s(k, b) * rf.s(l, d);
            m({a, b, c, d}) = acc;
          }
    double r = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            r = std::max(r, std::abs(m({a, b, c, d}) - std::conj(m({b, a, d, c}))));
    return r <= tol * scale;
  }
  // involution branch: the s-sandwich equals its own conjugate
  const Mat4 si = rf.s.inverse();
  CTensor t({4, 4, 4, 4});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          cd acc = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
              for (int z = 0; z < 4; ++z)
                for (int w = 0; w < 4; ++w)
                  acc += si(a, x) * rf.s(y, b) * si(c, z) * rf.s(w, d) * rs({x, y, z, w});
          t({a, b, c, d}) = acc;
        }
  double r = 0;
  for (std::size_t f = 0; f < t.size(); ++f)
    r = std::max(r, std::abs(std::conj(t.data()[f]) - rs.data()[f]));
  return r <= tol * scale;
}

Report curvature_suite(const NordenSet& n, std::uint64_t seed, int samples) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "curvature";

  double sym = 0, bia_t = 0, bia_s = 0, round = 0, recomp = 0, ptrace = 0, ric = 0, scal = 0,
         weyl_tr = 0;
  for (int t = 0; t < samples; ++t) {
    const AlgCurvature6 r6 = random_alg_curvature(seed + t, 1 + (t % 3));
    sym = std::max(sym, curvature_symmetry_residual(r6) / r6.max_abs());
    bia_t = std::max(bia_t, bianchi_tensor_residual(r6) / r6.max_abs());

    const CurvatureSpinTensor rs = tensor_to_spintensor(n, r6);
    bia_s = std::max(bia_s, bianchi_residual(rs) / rs.max_abs());
    round = std::max(round, (spintensor_to_tensor(n, rs) - r6).max_abs() / r6.max_abs());

    const CurvatureDecomposition dec = decompose(n, rs);
    recomp = std::max(recomp, (recompose(dec) - rs).max_abs() / rs.max_abs());

    // trace law P_{kc}^{kd} = 1/2 R delta; P stored [c][s][d][r] -> p[k][c][k][d]
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        cd acc = 0;
        for (int k = 0; k < 4; ++k) acc += dec.ricci_part({k, c, k, d});
        ptrace = std::max(ptrace,
                          std::abs(acc - 0.5 * dec.scalar * delta(c, d)) / std::abs(dec.scalar));
      }

    const Mat6 ric_direct = ricci_from_tensor(n, r6);
    const Mat6 ric_p = ricci_from_ricci_part(n, dec.ricci_part);
    ric = std::max(ric, (ric_p - ric_direct).cwiseAbs().maxCoeff() /
                            ric_direct.cwiseAbs().maxCoeff());

    cd rscal2 = 0;
    for (int b = 0; b < 6; ++b)
      for (int d = 0; d < 6; ++d) rscal2 += n.metric_g_inv(b, d) * ric_direct(b, d);
    scal = std::max(scal, std::abs(dec.scalar - rscal2) / std::abs(rscal2));

    // Weyl trace-freeness: all four single contractions
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        cd t1 = 0, t2 = 0, t3 = 0, t4 = 0;
        for (int k = 0; k < 4; ++k) {
          t1 += dec.weyl({k, k, x, y});
          t2 += dec.weyl({x, y, k, k});
          t3 += dec.weyl({k, x, y, k});
          t4 += dec.weyl({x, k, k, y});
        }
        weyl_tr = std::max({weyl_tr, std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4)});
      }
  }
  // the pushed-forward Weyl part has vanishing Ricci contraction
  {
    const AlgCurvature6 r6 = random_alg_curvature(seed, 2);
    const CurvatureDecomposition dec = decompose(n, tensor_to_spintensor(n, r6));
    const AlgCurvature6 c6 = spintensor_to_tensor(n, dec.weyl);
    const Mat6 ric_c = ricci_from_tensor(n, c6);
    rep.add("weyl_pushforward_ricci_free", ric_c.cwiseAbs().maxCoeff() / c6.max_abs(), 1e-10);
  }

  rep.add("curvature_symmetries", sym, 1e-12);
  rep.add("bianchi_tensor_identity", bia_t, 1e-12);
  rep.add("bianchi_spinor_trace", bia_s, 1e-10);
  rep.add("tensor_spintensor_roundtrip", round, 1e-9);
  rep.add("decomposition_recomposition", recomp, 1e-10);
  rep.add("ricci_part_trace", ptrace, 1e-10);
  rep.add("ricci_consistency", ric, 1e-9);
  rep.add("scalar_consistency", scal, 1e-9);
  rep.add("weyl_trace_free", weyl_tr, 1e-9);

  // constant curvature: h = k = g gives vanishing Weyl part
  {
    AlgCurvature6 rcc({6, 6, 6, 6});
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          for (int d = 0; d < 6; ++d)
            rcc({a, b, c, d}) = 2.0 * (n.metric_g(a, c) * n.metric_g(b, d) -
                                       n.metric_g(a, d) * n.metric_g(b, c));
    const CurvatureDecomposition dec = decompose(n, tensor_to_spintensor(n, rcc));
    rep.add("constant_curvature_weyl_zero", dec.weyl.max_abs(), 1e-10);
    rep.add("constant_curvature_scalar_60", std::abs(dec.scalar - cd(60)), 1e-9);
  }

  // reality predicates: norden-frame-real curvature satisfies the even-q (2,4)
  // predicate; a generic complex one does not
  {
    const RealFormData rf24 = build_real_form(n, 2, 4);
    Rng rng(seed + 9000);
    AlgCurvature6 rr({6, 6, 6, 6});
    Mat6 h = Mat6::Zero(), k = Mat6::Zero();
    for (int a = 0; a < 6; ++a)
      for (int b = a; b < 6; ++b) {
        h(a, b) = h(b, a) = rng.normal();
        k(a, b) = k(b, a) = rng.normal();
      }
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          for (int d = 0; d < 6; ++d)
            rr({a, b, c, d}) = h(a, c) * k(b, d) + h(b, d) * k(a, c) - h(a, d) * k(b, c) -
                               h(b, c) * k(a, d);
    const bool real_ok = spintensor_reality(rf24, tensor_to_spintensor(n, rr));
    const bool complex_bad =
        !spintensor_reality(rf24, tensor_to_spintensor(n, random_alg_curvature(seed + 1, 1)));
    rep.add("reality_predicate_24", (real_ok && complex_bad) ? 0.0 : 1.0, 0.5);
  }

  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hexaspinor
