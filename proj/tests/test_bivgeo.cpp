#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hexaspinor/bivgeo.hpp>
#include <hexaspinor/rng.hpp>

using namespace hexaspinor;

namespace {
const double kS2 = 0.70710678118654752440;
}

TEST_CASE("pfaffian pinned values") {
  Mat4 r = Mat4::Zero();
  r(0, 1) = kS2; r(1, 0) = -kS2;
  r(2, 3) = kS2; r(3, 2) = -kS2;
  CHECK(std::abs(pfaffian(r) - cd(1)) < 1e-14);  // the V=1 coordinate slice

  Rng rng(41);
  const Vec4 x = rng.cvector<4>(), y = rng.cvector<4>();
  const Mat4 w = x * y.transpose() - y * x.transpose();
  CHECK(std::abs(pfaffian(w)) < 1e-12 * w.cwiseAbs().maxCoeff() * w.cwiseAbs().maxCoeff());

  const NordenSet n = build_norden_special();
  for (int t = 0; t < 50; ++t) {
    const Mat4 g = rng.bivector();
    CHECK(std::abs(pfaffian(g) - 0.5 * (g.cwiseProduct(lower_bivector(n, g))).sum()) < 1e-11);
  }
  Mat4 bad = Mat4::Zero();
  bad(0, 0) = 1;
  CHECK_THROWS_AS(pfaffian(bad), input_error);
}

TEST_CASE("simplicity tests agree") {
  Rng rng(42);
  CHECK(is_simple(Mat4(Mat4::Zero())));
  Mat4 r = Mat4::Zero();
  r(0, 1) = 1; r(1, 0) = -1; r(2, 3) = 1; r(3, 2) = -1;  // pf = 2
  CHECK(!is_simple(r));
  int simple_hits = 0;
  for (int t = 0; t < 1000; ++t) {
    Mat4 w;
    if (t % 2 == 0) {
      const Vec4 x = rng.cvector<4>(), y = rng.cvector<4>();
      w = x * y.transpose() - y * x.transpose();
    } else {
      w = rng.bivector();
    }
    if (is_simple(w)) ++simple_hits;
  }
  CHECK(simple_hits == 500);  // the simple half, generic half never
}

TEST_CASE("null pair extraction recovers the factors") {
  Rng rng(43);
  // known pair: X = (1,0,0,0), Y = (0,1,0,0)
  {
    Vec4 x = Vec4::Unit(0), y = Vec4::Unit(1);
    const NullPair np = extract_null_pair(Mat4(x * y.transpose()));
    CHECK((np.x - x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((np.y - y).cwiseAbs().maxCoeff() < 1e-12);
  }
  for (int t = 0; t < 50; ++t) {
    const Vec4 x = rng.cvector<4>();
    Vec4 y = rng.cvector<4>();
    y -= ((x.transpose() * y)(0) / (x.transpose() * x)(0)) * x;
    const Mat4 p = x * y.transpose();
    const NullPair np = extract_null_pair(p);
    CHECK(np.residual < 1e-10 * p.cwiseAbs().maxCoeff());
    CHECK(std::abs((np.x.transpose() * np.y)(0)) < 1e-10 * p.cwiseAbs().maxCoeff());
    // gauge: the largest-magnitude component of X is exactly 1
    CHECK(std::abs(np.x.cwiseAbs().maxCoeff() - 1.0) < 1e-14);
    // phase-rescaled input with the same matrix gives the identical output
    const NullPair np2 = extract_null_pair(p);
    CHECK((np2.x - np.x).cwiseAbs().maxCoeff() == 0.0);
    CHECK((np2.y - np.y).cwiseAbs().maxCoeff() == 0.0);
  }
  // negative control: two nonzero singular values
  const Vec4 x1 = rng.cvector<4>(), x2 = rng.cvector<4>();
  Vec4 y1 = rng.cvector<4>(), y2 = rng.cvector<4>();
  y1 -= ((x1.transpose() * y1)(0) / (x1.transpose() * x1)(0)) * x1;
  y2 -= ((x2.transpose() * y2)(0) / (x2.transpose() * x2)(0)) * x2;
  Mat4 p2 = x1 * y1.transpose() + x2 * y2.transpose();
  p2 -= (p2.trace() / 4.0) * Mat4::Identity();
  CHECK_THROWS(extract_null_pair(p2));
  CHECK_THROWS_AS(extract_null_pair(Mat4(Mat4::Zero())), input_error);
}

TEST_CASE("canonical form of an already diagonal bivector") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 6, 0);
  const double c = 1.7;
  Mat4 r = Mat4::Zero();
  r(0, 0) = cd(0, c); r(1, 1) = cd(0, -c); r(2, 2) = cd(0, c); r(3, 3) = cd(0, -c);
  const CanonicalForm cf = canonical_form(n, rf, r);
  // descending imaginary part: (ic, ic, -ic, -ic)
  CHECK(std::abs(cf.lambda[0] - cd(0, c)) < 1e-12);
  CHECK(std::abs(cf.lambda[1] - cd(0, c)) < 1e-12);
  CHECK(std::abs(cf.lambda[2] - cd(0, -c)) < 1e-12);
  CHECK(std::abs(cf.lambda[3] - cd(0, -c)) < 1e-12);
}

TEST_CASE("canonical form diagonalizes and is conjugation invariant") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 6, 0);
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    Mat4 h = rng.cmatrix<4>();
    h = 0.5 * (h + h.adjoint()).eval();
    h -= (h.trace() / 4.0) * Mat4::Identity();
    const Mat4 r = cd(0, -1) * h;
    const CanonicalForm cf = canonical_form(n, rf, r);
    cd sum = 0;
    for (const cd& l : cf.lambda) sum += l;
    CHECK(std::abs(sum) < 1e-12);

    // the diagonalizer actually diagonalizes (eigen-solver oracle)
    const Mat4 d = cf.u.adjoint() * (cd(0, 1) * r) * cf.u;
    Mat4 offdiag = d;
    for (int k = 0; k < 4; ++k) offdiag(k, k) = 0;
    CHECK(offdiag.cwiseAbs().maxCoeff() < 1e-10 * r.cwiseAbs().maxCoeff());
    CHECK(std::abs(cf.u.determinant() - cd(1)) < 1e-10);

    Mat4 q = Eigen::HouseholderQR<Mat4>(rng.cmatrix<4>()).householderQ();
    q /= std::pow(q.determinant(), 0.25);
    const CanonicalForm cf2 = canonical_form(n, rf, Mat4(q.adjoint() * r * q));
    for (int j = 0; j < 4; ++j) CHECK(std::abs(cf2.lambda[j] - cf.lambda[j]) < 1e-9);
  }

  // error paths
  CHECK_THROWS_AS(canonical_form(n, rf, Mat4(Mat4::Identity())), input_error);
  const RealFormData rf24 = build_real_form(n, 2, 4);
  Mat4 ok = Mat4::Zero();
  ok(0, 0) = cd(0, 1); ok(1, 1) = cd(0, -1); ok(2, 2) = cd(0, 1); ok(3, 3) = cd(0, -1);
  CHECK_THROWS_AS(canonical_form(n, rf24, ok), input_error);
}

TEST_CASE("canonical invariants match the A-operator pairing") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 6, 0);
  Rng rng(45);
  Mat4 h = rng.cmatrix<4>();
  h = 0.5 * (h + h.adjoint()).eval();
  h -= (h.trace() / 4.0) * Mat4::Identity();
  const Mat4 r = cd(0, -1) * h;
  const CanonicalForm cf = canonical_form(n, rf, r);
  const AOperators a = build_a_operators(n);
  auto inv = [&](int al, int be) {
    cd acc = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) acc += a.a_low[al][be](x, y) * r(y, x);
    return acc;
  };
  CHECK(std::abs(cf.r16 - inv(0, 5)) == 0.0);
  CHECK(std::abs(cf.r23 - inv(1, 2)) == 0.0);
  CHECK(std::abs(cf.r45 - inv(3, 4)) == 0.0);
}

TEST_CASE("flag construction on the canonical basis") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 2, 4);
  const Vec4 X = Vec4::Unit(0), Y = Vec4::Unit(1), Z = Vec4::Unit(2), T = Vec4::Unit(3);
  const Flag f = build_flag(n, rf, X, Y, Z, T);
  auto dot6 = [&](const Vec6& a, const Vec6& b) { return (a.transpose() * n.metric_g * b)(0); };

  CHECK(std::abs(dot6(f.k, f.k)) < 1e-12);
  CHECK(std::abs(dot6(f.n, f.n)) < 1e-12);
  CHECK(std::abs(dot6(f.k, f.n)) < 1e-12);
  CHECK(std::abs(dot6(f.l, f.k)) < 1e-12);
  CHECK(std::abs(dot6(f.l, f.m)) < 1e-12);
  CHECK(std::abs(dot6(f.m, f.k)) < 1e-12);
  CHECK(std::abs(dot6(f.l, f.n)) < 1e-12);
  CHECK(std::abs(dot6(f.m, f.n)) < 1e-12);
  CHECK(std::abs(dot6(f.l, f.l) + cd(2)) < 1e-12);
  CHECK(std::abs(dot6(f.m, f.m) + cd(2)) < 1e-12);

  // frozen values from the construction: K = -(t+z)/sqrt2, N = -(v-w)/sqrt2,
  // L = sqrt2 y, M = sqrt2 x
  CHECK(std::abs(f.k(0) + cd(kS2)) < 1e-14);
  CHECK(std::abs(f.k(5) + cd(kS2)) < 1e-14);
  CHECK(std::abs(f.n(1) + cd(kS2)) < 1e-14);
  CHECK(std::abs(f.n(2) - cd(kS2)) < 1e-14);
  CHECK(std::abs(f.l(4) - cd(2 * kS2)) < 1e-14);
  CHECK(std::abs(f.m(3) - cd(2 * kS2)) < 1e-14);

  // extension: first type vanishes for this basis, second type is -sqrt2
  CHECK(f.extension_type == Flag::Type::second);
  CHECK(std::abs(f.extension_value - cd(-2 * kS2)) < 1e-12);
  CHECK(std::abs(f.extension - 2 * kS2) < 1e-12);
}

TEST_CASE("flag rotation and scaling laws") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 2, 4);
  const Vec4 X = Vec4::Unit(0), Y = Vec4::Unit(1), Z = Vec4::Unit(2), T = Vec4::Unit(3);
  const Flag f = build_flag(n, rf, X, Y, Z, T);
  auto dot6 = [&](const Vec6& a, const Vec6& b) { return (a.transpose() * n.metric_g * b)(0); };

  for (double th : {3.14159265358979323846 / 8, 3.14159265358979323846 / 4}) {
    Vec4 x = X, y = Y, z = Z, t = T;
    rotate_flag_basis(std::polar(1.0, th), x, y, z, t);
    const Flag f2 = build_flag(n, rf, x, y, z, t);
    CHECK(std::abs(dot6(f2.l, f.m) - cd(-2 * std::sin(2 * th))) < 1e-9);
    CHECK((f2.l - (std::cos(2 * th) * f.l + std::sin(2 * th) * f.m)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((f2.k - f.k).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f2.n - f.n).cwiseAbs().maxCoeff() < 1e-12);
  }

  const double r = 2.25;
  const Flag f3 = build_flag(n, rf, X, Vec4(Y / r), Z, Vec4(r * T));
  CHECK(std::abs(f3.extension - r * f.extension) < 1e-10);
  CHECK((f3.l - f.l).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((f3.m - f.m).cwiseAbs().maxCoeff() < 1e-10);

  // flag rotation by 2pi (theta = pi): T -> -T, flag invariant
  Vec4 x4 = X, y4 = Y, z4 = Z, t4 = T;
  rotate_flag_basis(std::polar(1.0, 3.14159265358979323846), x4, y4, z4, t4);
  CHECK((t4 + T).cwiseAbs().maxCoeff() < 1e-15);
  const Flag f4 = build_flag(n, rf, x4, y4, z4, t4);
  CHECK((f4.k - f.k).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((f4.l - f.l).cwiseAbs().maxCoeff() < 1e-12);

  // violated basis conditions are rejected
  CHECK_THROWS_AS(build_flag(n, rf, X, Y, Z, Vec4(T + 0.5 * X)), input_error);
}

TEST_CASE("bivgeo suite passes") {
  const NordenSet n = build_norden_special();
  const Report rep = bivgeo_suite(n, 2024, 200);
  for (const Check& c : rep.checks) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass);
  }
}
