#include <doctest.h>

#include <chrono>

#include "okubo/dotsenko_fateev.hpp"
#include "okubo/error.hpp"
#include "support.hpp"

using namespace okubo;
using okubo::testing::q;
using okubo::testing::qm;
using okubo::testing::RationalSampler;

namespace {

const DFParams kSample{q("1/3"), q("1/5"), q("1/7"), q("1/11")};
const DFParams kIntegral{q("1/3"), q("1/5"), q("1/7"), q("1/2")};

// Draws parameters for which every construction along the chain is defined.
DFParams random_df(RationalSampler& s) {
  for (;;) {
    const DFParams p{s.next(), s.next(), s.next(), s.next()};
    try {
      build_Q(p);
      euler_reduce(p.setting());
      return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("Dotsenko-Fateev residues") {
  const DFSystem s = build_df(kSample);
  CHECK(s.C0(0, 0) == 2 * kSample.a + 2 * kSample.c + kSample.g);
  CHECK(s.C1(0, 0) == 0);
  CHECK(s.C1(0, 1) == 0);
  CHECK(s.C1(0, 2) == 0);
  const Rational &a = kSample.a, &b = kSample.b, &g = kSample.g;
  const RationalMatrix sum = s.C0 + s.C1 - RationalMatrix::identity(3) * (a + b + 2 * kSample.c);
  CHECK(characteristic_polynomial(sum) == Poly{-g, 1} * Poly{-(a + b + g), 1} * Poly{a + b, 1});
  for (const auto& check : df_spectrum_checks(kSample)) {
    CHECK_MESSAGE(check.holds, check.name);
    CHECK(check.distinct);
  }
}

TEST_CASE("Euler reduction at the sample point") {
  const HGParams p = HGParams::okubo(q("1/3"), q("1/5"), q("1/7"), q("1/11"));
  const EulerReduction red = euler_reduce(p);
  CHECK(red.first_column_zero);
  CHECK(red.mu == lambda("--++", p));
  CHECK(red.K0 + red.K1 == RationalMatrix::diagonal({q("-214/1155"), q("-4/77"), q("-2/15")}));
  CHECK(red.K0 + red.K1 == RationalMatrix::diagonal({-p.alpha1 - p.alpha2 + p.beta1 + p.beta2,
                                                     -p.alpha2 + p.beta2, -p.alpha1 + p.beta1}));
  CHECK(characteristic_polynomial(red.K1) == poly_from_roots({0, -p.alpha1 + p.beta2, -p.alpha2 + p.beta1}));
  for (const auto& check : reduction_spectrum_checks(p, red)) CHECK_MESSAGE(check.holds, check.name);
}

TEST_CASE("eigenvector matrix Q") {
  const RationalMatrix Q = build_Q(kSample);
  CHECK(Q == qm({{"-1/5", "-103/573", "-7128/119375"}, {"1/3", "-103/573", "-88/573"},
                 {"2/15", "-206/573", "216/955"}}));
  const Rational ps = q("3/2");
  const RationalMatrix Qs = build_Q(kSample, ps);
  CHECK(Qs(0, 0) == -kSample.b * ps);
  CHECK(Qs(1, 0) == kSample.a * ps);
  CHECK(Qs(2, 0) == (kSample.a - kSample.b) * ps);
  CHECK(Qs == Q * ps);

  const DFSystem s = build_df(kSample);
  const Rational &a = kSample.a, &b = kSample.b, &c = kSample.c, &g = kSample.g;
  const RationalMatrix I = RationalMatrix::identity(3);
  CHECK(inverse(Q) * (s.C0 + s.C1 - I * (a + b + 2 * c)) * Q == RationalMatrix::diagonal({g, a + b + g, -(a + b)}));

  const EulerReduction red = euler_reduce(kSample.setting());
  CHECK(red.K0 == qm({{"1833/63448", "171701/352968", "7128/137711"}, {"87/616", "787/1848", "0"},
                      {"22150/23793", "0", "-787/2163"}}));
  CHECK(inverse(Q) * (s.C0 - I * (a + c)) * Q == red.K0);
  CHECK(inverse(Q) * (s.C1 - I * (b + c)) * Q == red.K1);

  CHECK(Q == q_tilde_lambda_form(kSample.setting()));
  CHECK(integral_solution_matrix(kSample) == Q);
  CHECK(integral_solution_matrix(kSample)(1, 0) == kSample.a);

  try {
    build_Q(DFParams{q("1/3"), q("1/5"), q("1/7"), q("-2/3")});
    FAIL("expected degenerate_parameters");
  } catch (const Error& e) {
    CHECK(e.code() == errc::kDegenerateParameters);
    CHECK(e.context() == "2a+g");
  }
}

TEST_CASE("transformation to the Dotsenko-Fateev system") {
  const DFTransformVerdict v = df_transform_check(kSample);
  CHECK(v.verdict);
  CHECK(v.offending.empty());
  CHECK(v.q_tilde_matches);
  CHECK(v.exponent_identities);
  CHECK(v.gamma_mu_identities);
}

TEST_CASE("random Dotsenko-Fateev parameters") {
  RationalSampler s(53);
  for (int i = 0; i < 30; ++i) {
    const DFParams p = random_df(s);
    const DFTransformVerdict v = df_transform_check(p);
    CHECK(v.verdict);
    CHECK(v.q_tilde_matches);
    CHECK(v.exponent_identities);
    CHECK(v.gamma_mu_identities);
    CHECK(v.reduction.first_column_zero);
    for (const auto& c : df_spectrum_checks(p)) CHECK_MESSAGE(c.holds, c.name);
    for (const auto& c : reduction_spectrum_checks(p.setting(), v.reduction)) CHECK_MESSAGE(c.holds, c.name);
  }
}

TEST_CASE("integral solution matches a high-precision reference") {
  // Computed independently at 40 digits with the same real-branch conventions.
  struct Ref {
    double x;
    std::array<double, 3> z;
  };
  const Ref refs[] = {
      {0.3, {-0.26457265487056317, -0.0018876769595927657, 0.056754043399825647}},
      {0.4, {-0.39586707485004386, -0.0057346148561067983, 0.12239709120466172}},
      {0.5, {-0.5386260737862049, -0.014160144057377924, 0.22738704457752193}},
  };
  for (const Ref& r : refs) {
    const auto z = df_integral_z(kIntegral, r.x, EulerTransformSpec{kIntegral.g / 2});
    for (int i = 0; i < 3; ++i) CHECK(z[i] == doctest::Approx(r.z[i]).epsilon(1e-11));
  }
}

TEST_CASE("integral solution residual") {
  const auto start = std::chrono::steady_clock::now();
  for (double x : {0.3, 0.4, 0.5}) {
    const DFIntegralResult res = df_integral_solution(kIntegral, x);
    CHECK(res.residual <= 1e-6);
    CHECK(res.quadrature_error <= 1e-8);
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(60));
}

TEST_CASE("integral solution is independent of the contour parametrization") {
  EulerTransformSpec power{kIntegral.g / 2, 4096, QuadratureScheme::power_substitution};
  EulerTransformSpec linear{kIntegral.g / 2, 8192, QuadratureScheme::linear};
  for (double x : {0.25, 0.45, 0.7}) {
    const auto zp = df_integral_z(kIntegral, x, power);
    const auto zl = df_integral_z(kIntegral, x, linear);
    for (int i = 0; i < 3; ++i) CHECK(zp[i] == doctest::Approx(zl[i]).epsilon(1e-9));
  }
}

TEST_CASE("integral solution preconditions") {
  CHECK_THROWS_AS(df_integral_solution(DFParams{q("1/3"), q("1/5"), q("1/7"), q("-1/2")}, 0.4), Error);
  CHECK_THROWS_AS(df_integral_solution(DFParams{q("-3"), q("1/5"), q("1/7"), q("1/2")}, 0.4), Error);
  CHECK_THROWS_AS(df_integral_solution(kIntegral, 1.2), Error);
  CHECK_THROWS_AS(df_integrals(kIntegral, 0.4, EulerTransformSpec{q("1/3")}), Error);
  try {
    df_integrals(kIntegral, 0.4, EulerTransformSpec{kIntegral.g / 2, 12});
    FAIL("expected quadrature_nonconvergence");
  } catch (const Error& e) {
    CHECK(e.code() == errc::kQuadrature);
  }
}
