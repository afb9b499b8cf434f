#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hexaspinor/curvature.hpp>
#include <hexaspinor/rng.hpp>

using namespace hexaspinor;

TEST_CASE("generator output satisfies every curvature symmetry") {
  const AlgCurvature6 r = random_alg_curvature(7, 2);
  CHECK(curvature_symmetry_residual(r) < 1e-12 * r.max_abs());
  CHECK(bianchi_tensor_residual(r) < 1e-12 * r.max_abs());
  // deterministic per seed
  CHECK(approx_equal(r, random_alg_curvature(7, 2)));
  CHECK(!approx_equal(r, random_alg_curvature(8, 2)));
  CHECK_THROWS_AS(random_alg_curvature(7, 0), input_error);
}

TEST_CASE("constant curvature input reduces to the scalar block") {
  const NordenSet n = build_norden_special();
  AlgCurvature6 rcc({6, 6, 6, 6});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d)
          rcc({a, b, c, d}) = 2.0 * (n.metric_g(a, c) * n.metric_g(b, d) -
                                     n.metric_g(a, d) * n.metric_g(b, c));
  const CurvatureSpinTensor rs = tensor_to_spintensor(n, rcc);
  const CurvatureDecomposition dec = decompose(n, rs);
  CHECK(dec.weyl.max_abs() < 1e-10);
  CHECK(std::abs(dec.scalar - cd(60)) < 1e-10);
  // the Ricci part is pure trace: its 6x6 image is (R/6) g
  const Mat6 ric_p = ricci_from_ricci_part(n, dec.ricci_part);
  CHECK((ric_p - (dec.scalar / 6.0) * n.metric_g).cwiseAbs().maxCoeff() < 1e-10);
  // recomposition from {C = 0, pure-trace P, R} reproduces the spin tensor
  CHECK((recompose(dec) - rs).max_abs() < 1e-10 * rs.max_abs());
}

TEST_CASE("round trip closes and zero maps to zero") {
  const NordenSet n = build_norden_special();
  CHECK(tensor_to_spintensor(n, AlgCurvature6({6, 6, 6, 6})).max_abs() == 0.0);
  for (std::uint64_t seed : {1, 2, 3}) {
    const AlgCurvature6 r = random_alg_curvature(seed, 2);
    const CurvatureSpinTensor rs = tensor_to_spintensor(n, r);
    CHECK((spintensor_to_tensor(n, rs) - r).max_abs() < 1e-9 * r.max_abs());
    // pair symmetry and trace invariants
    double tr = 0, sym = 0;
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        cd acc = 0;
        for (int k = 0; k < 4; ++k) acc += rs({k, k, c, d});
        tr = std::max(tr, std::abs(acc));
        for (int s = 0; s < 4; ++s)
          for (int rr = 0; rr < 4; ++rr)
            sym = std::max(sym, std::abs(rs({c, d, s, rr}) - rs({s, rr, c, d})));
      }
    CHECK(tr < 1e-10 * rs.max_abs());
    CHECK(sym < 1e-12 * rs.max_abs());
  }
}

TEST_CASE("maps are linear") {
  const NordenSet n = build_norden_special();
  const AlgCurvature6 r1 = random_alg_curvature(4, 1), r2 = random_alg_curvature(5, 1);
  Rng rng(6);
  const cd a = rng.cnormal(), b = rng.cnormal();
  const CurvatureSpinTensor lhs = tensor_to_spintensor(n, a * r1 + b * r2);
  const CurvatureSpinTensor rhs =
      a * tensor_to_spintensor(n, r1) + b * tensor_to_spintensor(n, r2);
  CHECK(approx_equal(lhs, rhs, Tolerance(1e-9, 1e-9)));
}

TEST_CASE("decomposition invariants") {
  const NordenSet n = build_norden_special();
  for (std::uint64_t seed : {10, 11, 12}) {
    const AlgCurvature6 r6 = random_alg_curvature(seed, 2);
    const CurvatureSpinTensor rs = tensor_to_spintensor(n, r6);
    const CurvatureDecomposition dec = decompose(n, rs);

    // recomposition reproduces the input exactly
    CHECK((recompose(dec) - rs).max_abs() < 1e-10 * rs.max_abs());

    // trace law
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        cd acc = 0;
        for (int k = 0; k < 4; ++k) acc += dec.ricci_part({k, c, k, d});
        CHECK(std::abs(acc - 0.5 * dec.scalar * (c == d ? 1.0 : 0.0)) <
              1e-10 * std::abs(dec.scalar));
      }

    // Ricci pairing against the direct-contraction oracle
    const Mat6 ric = ricci_from_tensor(n, r6);
    const Mat6 ric_p = ricci_from_ricci_part(n, dec.ricci_part);
    CHECK((ric - ric_p).cwiseAbs().maxCoeff() < 1e-9 * ric.cwiseAbs().maxCoeff());

    // scalar consistency with g^{bd} R_{bd}
    cd rscal2 = 0;
    for (int b2 = 0; b2 < 6; ++b2)
      for (int d2 = 0; d2 < 6; ++d2) rscal2 += n.metric_g_inv(b2, d2) * ric(b2, d2);
    CHECK(std::abs(dec.scalar - rscal2) < 1e-9 * std::abs(rscal2));

    // Weyl: fully trace-free and pair-symmetrized
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        cd t1 = 0, t3 = 0;
        for (int k = 0; k < 4; ++k) {
          t1 += dec.weyl({k, k, x, y});
          t3 += dec.weyl({k, x, y, k});
        }
        CHECK(std::abs(t1) < 1e-10 * std::max(1.0, dec.weyl.max_abs()));
        CHECK(std::abs(t3) < 1e-10 * std::max(1.0, dec.weyl.max_abs()));
      }
  }
}

TEST_CASE("Bianchi forms are equivalent") {
  const NordenSet n = build_norden_special();
  const AlgCurvature6 r6 = random_alg_curvature(20, 3);
  const CurvatureSpinTensor rs = tensor_to_spintensor(n, r6);
  CHECK(bianchi_tensor_residual(r6) < 1e-10 * r6.max_abs());
  CHECK(bianchi_residual(rs) < 1e-10 * rs.max_abs());
  CHECK(bianchi_residual(CurvatureSpinTensor({4, 4, 4, 4})) == 0.0);

  // negative control: a pair-symmetric trace-free array that is not a
  // curvature image has a generically large Bianchi-trace residual
  Rng rng(21);
  CurvatureSpinTensor x({4, 4, 4, 4});
  for (auto& v : x.data()) v = rng.cnormal();
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r) {
          const cd v = 0.5 * (x({c, d, s, r}) + x({s, r, c, d}));
          x({c, d, s, r}) = v;
          x({s, r, c, d}) = v;
        }
  CHECK(bianchi_residual(x) > 0.1);
}

TEST_CASE("reality predicates follow the branch structure") {
  const NordenSet n = build_norden_special();
  const RealFormData rf24 = build_real_form(n, 2, 4);
  const RealFormData rf33 = build_real_form(n, 3, 3);
  Rng rng(22);

  // norden-frame-real curvature (the (2,4) slice): even-q predicate holds
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
          rr({a, b, c, d}) =
              h(a, c) * k(b, d) + h(b, d) * k(a, c) - h(a, d) * k(b, c) - h(b, c) * k(a, d);
  CHECK(spintensor_reality(rf24, tensor_to_spintensor(n, rr)));
  CHECK(!spintensor_reality(rf24, tensor_to_spintensor(n, random_alg_curvature(23, 1))));

  // (3,3)-real curvature transported to the norden frame: odd-q predicate
  Mat6 ht = Mat6::Zero();
  {
    const cd i(0, 1);
    const cd d33[6] = {i, 1, 1, -i, 1, -i};  // H24^{-1} H33
    for (int a = 0; a < 6; ++a) ht(a, a) = d33[a];
  }
  AlgCurvature6 r33({6, 6, 6, 6});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d)
          r33({a, b, c, d}) = rr({a, b, c, d}) /
                              (ht(a, a) * ht(b, b) * ht(c, c) * ht(d, d));
  CHECK(spintensor_reality(rf33, tensor_to_spintensor(n, r33)));
}

TEST_CASE("curvature suite passes") {
  const NordenSet n = build_norden_special();
  const Report rep = curvature_suite(n, 2024, 50);
  for (const Check& c : rep.checks) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass);
  }
}
