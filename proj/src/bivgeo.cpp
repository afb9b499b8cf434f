#include <hexaspinor/bivgeo.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>

#include <hexaspinor/rng.hpp>

namespace hexaspinor {

namespace {

double max_abs(const MatX& m) { return m.cwiseAbs().maxCoeff(); }

Vec4 s_lowered(const RealFormData& rf, const Vec4& v) { return rf.s * v.conjugate(); }

Mat4 wedge(const Vec4& a, const Vec4& b) {
  return 0.5 * (a * b.transpose() - b * a.transpose());
}

// K^al = eta^al_{ab} B^{ab} (no 1/2: the flag formulas contract the full block)
Vec6 eta_contract(const NordenSet& n, const Mat4& b) {
  Vec6 out;
  for (int al = 0; al < 6; ++al) out(al) = (n.eta_dn[al].cwiseProduct(b)).sum();
  return out;
}

}  // namespace

cd pfaffian(const Bivector4& r) {
  if (!is_antisymmetric(r)) throw input_error("pfaffian: input must be antisymmetric");
  return 2.0 * (r(0, 1) * r(2, 3) - r(0, 2) * r(1, 3) + r(0, 3) * r(1, 2));
}

bool is_simple(const Bivector4& r, double tol) {
  if (!is_antisymmetric(r)) throw input_error("is_simple: input must be antisymmetric");
  const double scale = std::max(1.0, max_abs(r));
  const bool by_pf = std::abs(pfaffian(r)) <= tol * scale * scale;

  Eigen::JacobiSVD<Mat4> svd(r);
  const auto& sv = svd.singularValues();
  const bool by_rank = sv(2) <= std::sqrt(tol) * std::max(sv(0), tol);

  if (by_pf != by_rank) {
    // borderline inputs: the two tests should only disagree in a band around
    // the threshold; anything else signals numerical trouble
    const double pf_size = std::abs(pfaffian(r)) / (scale * scale);
    const double rank_size = sv(2) / std::max(sv(0), tol);
    if (pf_size > 100 * tol || rank_size > 100 * std::sqrt(tol))
      throw numeric_error("is_simple: pfaffian and rank tests disagree");
  }
  return by_pf;
}

NullPair extract_null_pair(const Mat4& p, double rank_tol) {
  const double scale = p.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw input_error("extract_null_pair: zero input");
  if (std::abs(p.trace()) > 1e-8 * scale)
    throw input_error("extract_null_pair: input must be traceless");
  const cd tr2 = (p * p).trace();
  if (std::abs(tr2) > 1e-8 * scale * scale)
    throw input_error("extract_null_pair: input must satisfy p_b^a p_a^b = 0");

  Eigen::JacobiSVD<Mat4> svd(p, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(1) > rank_tol * sv(0))
    throw input_error("extract_null_pair: input is not rank 1 within tolerance");

  Vec4 x = svd.matrixU().col(0);
  Vec4 y = sv(0) * svd.matrixV().col(0).conjugate();
  // gauge: largest-magnitude component of X equal to 1
  int bi = 0;
  double best = 0;
  for (int i = 0; i < 4; ++i)
    if (std::abs(x(i)) > best) { best = std::abs(x(i)); bi = i; }
  const cd c = x(bi);
  x /= c;
  y *= c;
  NullPair out;
  out.x = x;
  out.y = y;
  out.residual = max_abs(x * y.transpose() - p);
  return out;
}

CanonicalForm canonical_form(const NordenSet& n, const RealFormData& rf, const Mat4& r,
                             double tol) {
  if (!(rf.q == 0 || rf.q == 6))
    throw input_error("canonical_form: only q in {0,6} is supported");
  const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
  if (std::abs(r.trace()) > tol * scale)
    throw input_error("canonical_form: input must be traceless");
  // reality condition R_b^a = -conj(R^a_b), i.e. iR Hermitian
  const Mat4 h = cd(0, 1) * r;
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw input_error("canonical_form: reality condition violated");

  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (h + h.adjoint()));
  Eigen::Vector4d w = es.eigenvalues();
  Mat4 u = es.eigenvectors();

  // lambda_j = -i w_j; order by descending imaginary part = ascending w
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w(a) < w(b); });
  CanonicalForm out;
  Mat4 usorted;
  for (int j = 0; j < 4; ++j) {
    out.lambda[j] = cd(0, -1) * w(order[j]);
    usorted.col(j) = u.col(order[j]);
  }
  usorted /= std::pow(usorted.determinant(), 0.25);
  out.u = usorted;

  const AOperators a = build_a_operators(n);
  auto invariant = [&](int al, int be) {
    cd acc = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) acc += a.a_low[al][be](x, y) * r(y, x);
    return acc;
  };
  out.r16 = invariant(0, 5);
  out.r23 = invariant(1, 2);
  out.r45 = invariant(3, 4);
  return out;
}

void rotate_flag_basis(cd tau, Vec4& x, Vec4& y, Vec4& z, Vec4& t) {
  x /= tau;
  z /= tau;
  t *= tau;
  y *= tau;
}

Flag build_flag(const NordenSet& n, const RealFormData& rf24, const Vec4& x, const Vec4& y,
                const Vec4& z, const Vec4& t, double tol) {
  if (!(rf24.p == 2 && rf24.q == 4)) throw input_error("build_flag: needs the (2,4) real form");

  const Vec4 xl = s_lowered(rf24, x), yl = s_lowered(rf24, y), zl = s_lowered(rf24, z),
             tl = s_lowered(rf24, t);

  // the pairing closure of the basis conditions: u^a v_a with v_a = s_{aa'} conj(v)^{a'}
  auto pair = [](const Vec4& u, const Vec4& vl) { return (u.transpose() * vl)(0); };
  const cd pair_vals[8] = {pair(y, yl), pair(y, xl), pair(y, zl), pair(x, xl),
                           pair(x, tl), pair(z, zl), pair(z, tl), pair(t, tl)};
  for (const cd& v : pair_vals)
    if (std::abs(v) > tol) throw input_error("build_flag: basis pairing conditions violated");

  // normalization: eps^{abcd} X_a Y_b Z_c T_d = X^c Z_c * Y^d T_d = 1
  const CTensor eu = n.eps4.upper();
  cd norm1 = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) norm1 += eu({a, b, c, d}) * xl(a) * yl(b) * zl(c) * tl(d);
  const cd norm2 = (x.transpose() * zl)(0) * (y.transpose() * tl)(0);
  if (std::abs(norm1 - cd(1)) > tol || std::abs(norm2 - cd(1)) > tol)
    throw input_error("build_flag: basis normalization violated");

  Flag f;
  f.k = eta_contract(n, Mat4(cd(0, 1) * wedge(t, x)));
  f.n = eta_contract(n, wedge(t, z));
  f.l = eta_contract(n, Mat4(-wedge(t, y) + wedge(x, z)));
  f.m = eta_contract(n, Mat4(cd(0, -1) * (wedge(t, y) + wedge(x, z))));

  // extension: first-type value V+W of K if nonzero, else second-type T+Z
  const cd first = f.k(1) + f.k(2);
  const cd second = f.k(0) + f.k(5);
  if (std::abs(first) > tol) {
    f.extension_value = first;
    f.extension_type = Flag::Type::first;
  } else if (std::abs(second) > tol) {
    f.extension_value = second;
    f.extension_type = Flag::Type::second;
  } else {
    throw input_error("build_flag: both extension denominators vanish");
  }
  f.extension = std::abs(f.extension_value);
  return f;
}

Report bivgeo_suite(const NordenSet& n, std::uint64_t seed, int samples) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "bivgeo";
  Rng rng(seed);

  // pf(X ^ Y) = 0 and pf = 1/2 R^{ab}R_{ab}
  double pf_simple = 0, pf_half = 0, simple_agree = 0;
  for (int t = 0; t < samples; ++t) {
    const Vec4 x = rng.cvector<4>(), y = rng.cvector<4>();
    const Mat4 w = x * y.transpose() - y * x.transpose();
    pf_simple = std::max(pf_simple, std::abs(pfaffian(w)) / std::max(1.0, max_abs(w) * max_abs(w)));
    if (!is_simple(w)) simple_agree = 1;
    const Mat4 g = rng.bivector();
    const Mat4 gl = lower_bivector(n, g);
    pf_half = std::max(pf_half, std::abs(pfaffian(g) - 0.5 * (g.cwiseProduct(gl)).sum()) /
                                    std::max(1.0, max_abs(g) * max_abs(g)));
    if (is_simple(g) && std::abs(pfaffian(g)) > 1e-6) simple_agree = 1;
  }
  rep.add("pf_simple_vanishes", pf_simple, 1e-11);
  rep.add("pf_equals_half_contraction", pf_half, 1e-11);
  rep.add("is_simple_consistency", simple_agree, 0.5);

  // null pair extraction
  double np_res = 0, np_gauge = 0;
  for (int t = 0; t < 50; ++t) {
    const Vec4 x = rng.cvector<4>();
    Vec4 y = rng.cvector<4>();
    // bilinear orthogonality x^a y_a = 0
    y -= ((x.transpose() * y)(0) / (x.transpose() * x)(0)) * x;
    const Mat4 p = x * y.transpose();
    const NullPair np = extract_null_pair(p);
    np_res = std::max(np_res, np.residual / max_abs(p));
    // gauge stability under input rescaling
    const NullPair np2 = extract_null_pair(Mat4(cd(std::cos(0.7), std::sin(0.7)) * p * 1.0));
    np_gauge = std::max(np_gauge, (np2.x - np.x).cwiseAbs().maxCoeff());
  }
  rep.add("nullpair_reconstruction", np_res, 1e-10);
  rep.add("nullpair_gauge_fixed_x", np_gauge, 1e-10);

  // canonical form on the (6,0) real form
  const RealFormData rf60 = build_real_form(n, 6, 0);
  double csum = 0, cinv = 0;
  for (int t = 0; t < 20; ++t) {
    Mat4 h = rng.cmatrix<4>();
    h = 0.5 * (h + h.adjoint()).eval();
    h -= (h.trace() / 4.0) * Mat4::Identity();
    const Mat4 r = cd(0, -1) * h;
    const CanonicalForm cf = canonical_form(n, rf60, r);
    cd sum = 0;
    for (const cd& l : cf.lambda) sum += l;
    csum = std::max(csum, std::abs(sum));
    // conjugation invariance under special unitary transforms
    Mat4 q = Eigen::HouseholderQR<Mat4>(rng.cmatrix<4>()).householderQ();
    q /= std::pow(q.determinant(), 0.25);
    const Mat4 rt = q.adjoint() * r * q;
    const CanonicalForm cf2 = canonical_form(n, rf60, rt);
    for (int j = 0; j < 4; ++j) cinv = std::max(cinv, std::abs(cf2.lambda[j] - cf.lambda[j]));
  }
  rep.add("canonical_eigenvalue_sum", csum, 1e-12);
  rep.add("canonical_conjugation_invariance", cinv, 1e-9);

  // flags on the canonical basis
  const RealFormData rf24 = build_real_form(n, 2, 4);
  {
    const Vec4 X = Vec4::Unit(0), Y = Vec4::Unit(1), Z = Vec4::Unit(2), T = Vec4::Unit(3);
    const Flag f = build_flag(n, rf24, X, Y, Z, T);
    auto dot6 = [&](const Vec6& a, const Vec6& b) { return (a.transpose() * n.metric_g * b)(0); };
    double r_orth = 0;
    r_orth = std::max(r_orth, std::abs(dot6(f.k, f.k)));
    r_orth = std::max(r_orth, std::abs(dot6(f.n, f.n)));
    r_orth = std::max(r_orth, std::abs(dot6(f.k, f.n)));
    r_orth = std::max(r_orth, std::abs(dot6(f.l, f.k)));
    r_orth = std::max(r_orth, std::abs(dot6(f.l, f.m)));
    r_orth = std::max(r_orth, std::abs(dot6(f.m, f.k)));
    r_orth = std::max(r_orth, std::abs(dot6(f.l, f.n)));
    r_orth = std::max(r_orth, std::abs(dot6(f.m, f.n)));
    r_orth = std::max(r_orth, std::abs(dot6(f.l, f.l) + cd(2)));
    r_orth = std::max(r_orth, std::abs(dot6(f.m, f.m) + cd(2)));
    double rreal = std::max(std::max(f.k.imag().cwiseAbs().maxCoeff(),
                                     f.n.imag().cwiseAbs().maxCoeff()),
                            std::max(f.l.imag().cwiseAbs().maxCoeff(),
                                     f.m.imag().cwiseAbs().maxCoeff()));
    rep.add("flag_orthogonality_relations", r_orth, 1e-9);
    rep.add("flag_reality", rreal, 1e-10);

    // theta rotation law of the flag plane
    double rth = 0;
    for (double th : {3.14159265358979323846 / 8, 3.14159265358979323846 / 4}) {
      Vec4 x2 = X, y2 = Y, z2 = Z, t2 = T;
      rotate_flag_basis(std::polar(1.0, th), x2, y2, z2, t2);
      const Flag f2 = build_flag(n, rf24, x2, y2, z2, t2);
      rth = std::max(rth, std::abs(dot6(f2.l, f.m) - cd(-2 * std::sin(2 * th))));
      rth = std::max(rth, (f2.l - (std::cos(2 * th) * f.l + std::sin(2 * th) * f.m))
                              .cwiseAbs()
                              .maxCoeff());
      rth = std::max(rth, (f2.k - f.k).cwiseAbs().maxCoeff());
    }
    rep.add("flag_rotation_law", rth, 1e-9);

    // scaling law: T -> rT, Y -> Y/r
    const double rr = 1.75;
    const Flag f3 = build_flag(n, rf24, X, Vec4(Y / rr), Z, Vec4(rr * T));
    double rsc = std::abs(f3.extension - rr * f.extension);
    rsc = std::max(rsc, (f3.l - f.l).cwiseAbs().maxCoeff());
    rsc = std::max(rsc, (f3.m - f.m).cwiseAbs().maxCoeff());
    rep.add("flag_scaling_law", rsc, 1e-10);

    // a flag rotation by 2 pi (theta = pi) maps T to -T and fixes the flag
    Vec4 x4 = X, y4 = Y, z4 = Z, t4 = T;
    rotate_flag_basis(std::polar(1.0, 3.14159265358979323846), x4, y4, z4, t4);
    const Flag f4 = build_flag(n, rf24, x4, y4, z4, t4);
    double r_turn = (t4 + T).cwiseAbs().maxCoeff();
    r_turn = std::max(r_turn, (f4.k - f.k).cwiseAbs().maxCoeff());
    r_turn = std::max(r_turn, (f4.l - f.l).cwiseAbs().maxCoeff());
    rep.add("flag_2pi_rotation", r_turn, 1e-10);
  }

  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hexaspinor
