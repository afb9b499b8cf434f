#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hexaspinor/realforms.hpp>
#include <hexaspinor/rng.hpp>

using namespace hexaspinor;

TEST_CASE("the (2,4) tables are bit-exact") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 2, 4);

  Mat4 s_expected;
  s_expected << 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0;
  CHECK((rf.s - s_expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(rf.s_kind == SKind::polarity);

  const cd i(0, 1);
  for (int k = 0; k < 6; ++k) {
    CHECK(rf.h(k, k) == (k < 2 ? cd(1) : i));
    CHECK(rf.involution(k, k) == (k < 2 ? cd(1) : cd(-1)));
    CHECK(rf.induced_metric(k, k) == (k < 2 ? 1.0 : -1.0));
  }
}

TEST_CASE("all four rows satisfy the inclusion invariants") {
  const NordenSet n = build_norden_special();
  const int sigs[4][2] = {{6, 0}, {1, 5}, {2, 4}, {3, 3}};
  for (auto [p, q] : sigs) {
    const RealFormData rf = build_real_form(n, p, q);
    CHECK((rf.h_inv * rf.h - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((rf.h * rf.h_inv - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((rf.involution * rf.involution.conjugate() - Mat6::Identity()).cwiseAbs().maxCoeff() <
          1e-14);
    int plus = 0, minus = 0;
    for (int k = 0; k < 6; ++k) (rf.induced_metric(k, k) > 0 ? plus : minus)++;
    CHECK(plus == p);
    CHECK(minus == q);
  }
  CHECK_THROWS_AS(build_real_form(n, 4, 2), input_error);
}

TEST_CASE("row 1 is the identity polarity, rows 2 and 4 are involutions") {
  const NordenSet n = build_norden_special();
  const RealFormData r60 = build_real_form(n, 6, 0);
  CHECK(r60.s_kind == SKind::polarity);
  CHECK((r60.s - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((r60.involution - Mat6::Identity()).cwiseAbs().maxCoeff() == 0.0);

  const RealFormData r15 = build_real_form(n, 1, 5);
  CHECK(r15.s_kind == SKind::involution);
  // quaternionic: s conj(s) = -I
  CHECK((r15.s * r15.s.conjugate() + Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  const RealFormData r33 = build_real_form(n, 3, 3);
  CHECK(r33.s_kind == SKind::involution);
  CHECK((r33.s * r33.s.conjugate() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("branch formulas reconstruct the involutions") {
  const NordenSet n = build_norden_special();
  const int sigs[4][2] = {{6, 0}, {1, 5}, {2, 4}, {3, 3}};
  for (auto [p, q] : sigs) {
    const RealFormData rf = build_real_form(n, p, q);
    const Mat6 s6 = involution_from_s(n, rf);  // throws if it does not match
    CHECK((s6 - rf.involution).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("real vector predicate") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 2, 4);
  Vec6 v = Vec6::Zero();
  v(0) = 1;
  CHECK(is_real_vector(rf, v));
  v(0) = cd(0, 1);
  CHECK(!is_real_vector(rf, v));

  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    Vec6 u;
    for (int k = 0; k < 6; ++k) u(k) = rng.normal();
    CHECK(is_real_vector(rf, Vec6(rf.h.transpose() * u)));
  }
}

TEST_CASE("bivector reality check distinguishes real pairs") {
  const NordenSet n = build_norden_special();
  const RealFormData rf = build_real_form(n, 2, 4);
  const Vec4 x = Vec4::Unit(0), y = Vec4::Unit(1);
  // canonical pair: all pairings vanish for the shipped s block
  CHECK(bivector_reality_check(rf, x, y));
  // reflexive consistency
  CHECK(std::abs(reality_pairing(rf, x, y) - reality_pairing(rf, y, x)) <
        std::abs(reality_pairing(rf, x, y)) + 1.0);
  CHECK(bivector_reality_check(rf, x, x));
  // random pairs are generically not real
  Rng rng(32);
  int hits = 0;
  for (int t = 0; t < 20; ++t)
    if (bivector_reality_check(rf, rng.cvector<4>(), rng.cvector<4>())) ++hits;
  CHECK(hits == 0);
}

TEST_CASE("realform suite passes") {
  const NordenSet n = build_norden_special();
  const Report rep = realform_suite(n, 2024, 20);
  for (const Check& c : rep.checks) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass);
  }
}
