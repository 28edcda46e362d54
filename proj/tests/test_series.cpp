#include <doctest.h>

#include <cmath>

#include "okubo/accessory.hpp"
#include "okubo/error.hpp"
#include "okubo/series.hpp"
#include "support.hpp"

using namespace okubo;
using okubo::testing::q;
using okubo::testing::RationalSampler;

namespace {

HGParams sample() { return HGParams::okubo(q("1/3"), q("1/5"), q("1/7"), q("1/11")); }

OkuboSystem sample_A0() { return build_okubo_zero(sample()).system; }

const BasePoint kBases[] = {BasePoint::zero, BasePoint::one, BasePoint::infinity};

double sample_radius(BasePoint base) { return base == BasePoint::infinity ? 2.5 : 0.3; }

double max_gap(const SeriesValue& a, const SeriesValue& b) {
  double m = 0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a.y[i] - b.y[i]));
  return m;
}

}  // namespace

TEST_CASE("Gauss series values") {
  CHECK(hyp2f1(q("1/3").to_double(), 0.2, 0.7, 0.0, 10) == Complex(1));
  CHECK(hyp2f1(1, 1, 2, 0.5, 200).real() == doctest::Approx(2 * std::log(2.0)).epsilon(1e-15));
  CHECK(hyp2f1_adaptive(1, 1, 2, 0.5).value.real() == doctest::Approx(2 * std::log(2.0)).epsilon(1e-15));

  // f + (x/alpha) f' = 2F1(alpha + 1, beta, gamma; x)
  const double a = 1.0 / 3, b = 0.2, g = 0.7;
  const Complex x = 0.25;
  const Hyp2F1Jet f = hyp2f1_jet(a, b, g, x, 120);
  CHECK(std::abs(f.value + x / a * f.d1 - hyp2f1(a + 1, b, g, x, 120)) < 1e-12);
  CHECK(std::abs(f.value + x / b * f.d1 - hyp2f1(a, b + 1, g, x, 120)) < 1e-12);
  CHECK(f.last_term < 1e-60);

  // Gauss's equation x(1-x) f'' + (g - (a+b+1)x) f' - ab f = 0
  CHECK(std::abs(x * (1.0 - x) * f.d2 + (g - (a + b + 1) * x) * f.d1 - a * b * f.value) < 1e-13);

  CHECK_THROWS_AS(hyp2f1(1, 1, -2, 0.1, 10), Error);
  CHECK_THROWS_AS(hyp2f1_jet(q("1"), q("1"), q("0"), 0.1, 10), Error);
  try {
    hyp2f1(1, 1, 2, 1.0, 10);
    FAIL("expected outside_disc");
  } catch (const Error& e) {
    CHECK(e.code() == errc::kOutsideDisc);
  }
}

TEST_CASE("product vector w") {
  HGParams p = sample();
  p.gamma1 = q("2/9");
  p.gamma2 = q("5/13");
  const VectorJet w0 = product_vector_w(p, 0.0, 30);
  CHECK(w0.value == CVector4{1, 0, 0, 0});

  const Complex x = 0.25;
  const VectorJet w = product_vector_w(p, x, 60);
  const Hyp2F1Jet f1 = hyp2f1_jet(p.alpha1, p.beta1, p.gamma1, x, 60);
  const Hyp2F1Jet f2 = hyp2f1_jet(p.alpha2, p.beta2, p.gamma2, x, 60);
  CHECK(std::abs(w.value[1] - x * f1.d1 * f2.value) < 1e-15);
  CHECK(product_system_residual(p, x, 60) <= 1e-10);
  CHECK(product_system_residual(p, Complex(0.3, 0.2), 0) <= 1e-12);
}

TEST_CASE("v vector by two routes") {
  const HGParams p = sample();
  const Complex x = 0.2;
  const VVector v = v_vector(p, x, 80);
  const Complex pre = std::pow(x, (p.gamma1 - 1).to_double());
  const Complex first = pre * hyp2f1_jet(p.alpha1 + 1, p.beta1, p.gamma1, x, 80).value *
                        hyp2f1_jet(p.alpha2 + 1, p.beta2, p.gamma2, x, 80).value;
  CHECK(std::abs(v.via_products[0] - first) < 1e-15);
  CHECK(v.max_relative_gap <= 1e-10);
  CHECK(v_system_residual(p, x, 80) <= 1e-9);
  CHECK_THROWS_AS(v_vector(p, -0.2, 40), Error);

  RationalSampler s(31);
  std::uniform_real_distribution<double> radius(0.05, 0.6), angle(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const Complex xi = std::polar(radius(s.engine()), angle(s.engine()));
    CHECK(v_vector(p, xi, 0).max_relative_gap <= 1e-9);
    CHECK(v_system_residual(p, xi, 0) <= 1e-9);
    CHECK(okubo_chain_residual(p, xi, 0) <= 1e-9);
  }
}

TEST_CASE("initial vectors of local series") {
  const OkuboSystem A0 = sample_A0();
  const ExactSeries at_one = local_series<Rational>(A0, BasePoint::one, 2, 3);
  CHECK(at_one.exponent == A0.b);
  CHECK(at_one.coeffs[0] == std::array<Rational, 4>{0, 0, 1, 0});

  const ExactSeries minus_b = local_series<Rational>(A0, BasePoint::one, 3, 3);
  CHECK(minus_b.exponent == -A0.b);
  CHECK(minus_b.coeffs[0] == std::array<Rational, 4>{0, 0, 0, 1});

  // rho = 0 at x = 1: (-bJ) g34(0) = A21 g12(0)
  for (int idx : {0, 1}) {
    const ExactSeries s0 = local_series<Rational>(A0, BasePoint::one, idx, 2);
    const auto& g = s0.coeffs[0];
    const RationalMatrix A21 = A0.A21();
    CHECK(-A0.b * g[2] == A21(0, 0) * g[0] + A21(0, 1) * g[1]);
    CHECK(A0.b * g[3] == A21(1, 0) * g[0] + A21(1, 1) * g[1]);
  }

  const ExactSeries inf = local_series<Rational>(A0, BasePoint::infinity, 0, 2);
  CHECK(inf.exponent == A0.c);
  const auto& h = inf.coeffs[0];
  const RationalVector hv{h[0], h[1], h[2], h[3]};
  CHECK((A0.A + RationalMatrix::identity(4) * A0.c) * hv == RationalVector(4, Rational(0)));

  CHECK_THROWS_AS(local_series<double>(A0, BasePoint::one, 4, 10), Error);
  try {
    local_series<double>(A0, BasePoint::zero, -1, 10);
  } catch (const Error& e) {
    CHECK(e.code() == errc::kOutOfRange);
  }
}

TEST_CASE("exact series satisfy their recurrences identically") {
  const OkuboSystem A0 = sample_A0();
  for (BasePoint base : kBases)
    for (int idx = 0; idx < 4; ++idx) {
      const ExactSeries s = local_series<Rational>(A0, base, idx, 12);
      CHECK(recurrence_defect(A0, s) == 0.0);
      const FloatSeries f = local_series<double>(A0, base, idx, 60);
      CHECK(recurrence_defect(A0, f) <= 1e-13);
      for (int r = 0; r < 12; ++r)
        for (int i = 0; i < 4; ++i)
          CHECK(f.coeffs[r][i] == doctest::Approx(s.coeffs[r][i].to_double()).epsilon(1e-12));
    }
}

TEST_CASE("a perturbed coefficient breaks the recurrence") {
  const OkuboSystem A0 = sample_A0();
  ExactSeries s = local_series<Rational>(A0, BasePoint::one, 0, 6);
  s.coeffs[3][1] += Rational(1, 1000);
  CHECK(recurrence_defect(A0, s) > 0);
}

TEST_CASE("residuals of summed local series") {
  const OkuboSystem A0 = sample_A0();
  for (BasePoint base : kBases)
    for (int idx = 0; idx < 4; ++idx) {
      const FloatSeries f = local_series<double>(A0, base, idx, 60);
      const EvalReport rep = residual_report(A0, f, circle_samples(base, 12, sample_radius(base)));
      CHECK_MESSAGE(rep.max_residual <= 1e-10, to_string(base) << " idx " << idx);
      CHECK(rep.terms_used == 60);
    }
  // boundary of the evaluation region at infinity
  const FloatSeries edge = local_series<double>(A0, BasePoint::infinity, 2, 90);
  CHECK(residual_report(A0, edge, circle_samples(BasePoint::infinity, 8, 1.7)).max_residual <= 1e-10);
}

TEST_CASE("the zero solution has zero residual") {
  const OkuboSystem A0 = sample_A0();
  FloatSeries zero = local_series<double>(A0, BasePoint::one, 0, 5);
  for (auto& g : zero.coeffs) g.fill(0.0);
  CHECK(residual_report(A0, zero, circle_samples(BasePoint::one, 5, 0.3)).max_residual == 0.0);
}

TEST_CASE("truncations converge to the same sum") {
  const OkuboSystem A0 = sample_A0();
  const Complex x = 1.3;
  for (int idx = 0; idx < 4; ++idx) {
    const SeriesValue lo = evaluate_series(local_series<double>(A0, BasePoint::one, idx, 30), x);
    const SeriesValue hi = evaluate_series(local_series<double>(A0, BasePoint::one, idx, 90), x);
    CHECK(max_gap(lo, hi) <= 1e-8);
  }
}

TEST_CASE("residual decreases with the truncation order") {
  const OkuboSystem A0 = sample_A0();
  RationalSampler s(17);
  std::uniform_real_distribution<double> radius(0.05, 0.4), angle(-3.1, 3.1);
  std::vector<Complex> pts;
  for (int i = 0; i < 30; ++i) pts.push_back(1.0 + std::polar(radius(s.engine()), angle(s.engine())));
  for (int idx = 0; idx < 4; ++idx) {
    double prev = 1e300;
    for (int n : {20, 30, 40, 50, 60}) {
      const double r = residual_report(A0, local_series<double>(A0, BasePoint::one, idx, n), pts).max_residual;
      CHECK((r <= prev || r <= 1e-14));
      prev = r;
    }
    CHECK(prev <= 1e-12);
  }
}

TEST_CASE("evaluation outside the disc is rejected") {
  const OkuboSystem A0 = sample_A0();
  const FloatSeries f = local_series<double>(A0, BasePoint::one, 2, 20);
  try {
    evaluate_series(f, Complex(0.2));
    FAIL("expected outside_disc");
  } catch (const Error& e) {
    CHECK(e.code() == errc::kOutsideDisc);
  }
  CHECK_THROWS_AS(evaluate_series(local_series<double>(A0, BasePoint::infinity, 0, 20), Complex(2.0)), Error);
  CHECK_THROWS_AS(evaluate_series(f, Complex(1.0)), Error);
}

TEST_CASE("solutions of the special system transported to the Okubo form") {
  const HGParams p = sample();
  const Realization real = realize(p);
  OkuboSystem special;
  special.A = real.A1;
  special.a = real.a;
  special.b = real.b;
  special.c = real.c;
  special.d = real.d;
  const Matrix<double> Dinv = to_double(inverse(real.D1));
  const Matrix<double> A0 = to_double(real.A0);
  for (BasePoint base : kBases)
    for (int idx = 0; idx < 4; ++idx) {
      const FloatSeries f = local_series<double>(special, base, idx, 60);
      double worst = 0;
      for (const Complex& x : circle_samples(base, 8, sample_radius(base))) {
        const SeriesValue y = evaluate_series(f, x);
        SeriesValue u{};
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) {
            u.y[i] += Dinv(i, j) * y.y[j];
            u.dy[i] += Dinv(i, j) * y.dy[j];
          }
        worst = std::max(worst, okubo_residual(A0, x, u));
      }
      CHECK(worst <= 1e-10);
    }
}

TEST_CASE("series for random accessory charts") {
  RationalSampler s(41);
  int done = 0;
  while (done < 5) {
    auto [a, b, c, d] = s.admissible();
    AccessoryChart ch;
    try {
      ch = chart_solving_r1(a, b, c, d, s.next(), s.next(), s.next());
    } catch (const Error&) {
      continue;
    }
    const OkuboSystem sys = parametrize_A1(ch);
    for (BasePoint base : kBases) {
      const ExactSeries e = local_series<Rational>(sys, base, done % 4, 8);
      CHECK(recurrence_defect(sys, e) == 0.0);
    }
    ++done;
  }
}
