#include "okubo/dotsenko_fateev.hpp"

#include <cmath>

#include "okubo/error.hpp"
#include "okubo/quadrature.hpp"
#include "okubo/series.hpp"

namespace okubo {

namespace {

Rational require_nonzero(const Rational& v, const std::string& what) {
  if (v.is_zero()) throw Error(errc::kDegenerateParameters, what + " vanishes", what);
  return v;
}

SpectrumCheck spectrum(std::string name, const RationalMatrix& m, const std::vector<Rational>& eig) {
  SpectrumCheck s;
  s.name = std::move(name);
  s.charpoly = characteristic_polynomial(m);
  s.expected = poly_from_roots(eig);
  s.holds = s.charpoly == s.expected;
  s.distinct = true;
  for (std::size_t i = 0; i < eig.size(); ++i)
    for (std::size_t j = i + 1; j < eig.size(); ++j)
      if (eig[i] == eig[j]) s.distinct = false;
  return s;
}

}  // namespace

HGParams DFParams::setting() const { return HGParams::okubo(a, -b, c, a + b + c + g); }

DFSystem build_df(const DFParams& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c, &g = p.g;
  DFSystem s;
  s.C0 = RationalMatrix{{2 * a + 2 * c + g, 0, b}, {0, 0, 0}, {0, 2 * b + g, a + c}};
  s.C1 = RationalMatrix{{0, 0, 0}, {0, 2 * b + 2 * c + g, a}, {2 * a + g, 0, b + c}};
  return s;
}

std::vector<SpectrumCheck> df_spectrum_checks(const DFParams& p) {
  const DFSystem s = build_df(p);
  const Rational &a = p.a, &b = p.b, &c = p.c, &g = p.g;
  const RationalMatrix I = RationalMatrix::identity(3);
  return {
      spectrum("C0 - (a+c)I", s.C0 - I * (a + c), {a + c + g, -a - c, 0}),
      spectrum("C1 - (b+c)I", s.C1 - I * (b + c), {b + c + g, -b - c, 0}),
      spectrum("C0 + C1 - (a+b+2c)I", s.C0 + s.C1 - I * (a + b + 2 * c), {g, a + b + g, -a - b}),
  };
}

EulerReduction euler_reduce(const HGParams& p) {
  const RationalMatrix A = build_okubo_zero(p).system.A;
  const RationalMatrix R = build_R(p);
  const RationalMatrix Rinv = inverse(R);
  EulerReduction red;
  red.mu = lambda("--++", p);
  const RationalMatrix shifted = A + RationalMatrix::identity(4) * red.mu;
  red.M0 = R * RationalMatrix::diagonal({1, 1, 0, 0}) * shifted * Rinv;
  red.M1 = R * RationalMatrix::diagonal({0, 0, 1, 1}) * shifted * Rinv;
  red.K0 = red.M0.block(1, 1, 3, 3);
  red.K1 = red.M1.block(1, 1, 3, 3);
  red.first_column_zero = true;
  for (std::size_t i = 0; i < 4; ++i)
    if (!red.M0(i, 0).is_zero() || !red.M1(i, 0).is_zero()) red.first_column_zero = false;
  return red;
}

std::vector<SpectrumCheck> reduction_spectrum_checks(const HGParams& p, const EulerReduction& red) {
  const Rational &a1 = p.alpha1, &a2 = p.alpha2, &b1 = p.beta1, &b2 = p.beta2;
  std::vector<SpectrumCheck> out{
      spectrum("K0", red.K0, {b1 + b2, -a1 - a2, 0}),
      spectrum("K1", red.K1, {-a1 + b2, -a2 + b1, 0}),
  };
  SpectrumCheck sum;
  sum.name = "K0 + K1";
  const RationalMatrix expected =
      RationalMatrix::diagonal({2 * lambda("--++", p), 2 * lambda("0-0+", p), 2 * lambda("-0+0", p)});
  sum.holds = red.K0 + red.K1 == expected;
  sum.charpoly = characteristic_polynomial(red.K0 + red.K1);
  sum.expected = characteristic_polynomial(expected);
  sum.distinct = true;
  out.push_back(sum);
  return out;
}

RationalMatrix build_Q(const DFParams& params, const Rational& p) {
  const Rational &a = params.a, &b = params.b, &g = params.g;
  require_nonzero(p, "p");
  const Rational s = require_nonzero(2 * a + 2 * b + g, "2a+2b+g");
  const Rational t = require_nonzero(2 * a + g, "2a+g");
  const Rational q = -a * (a + b + g) / s * p;
  const Rational r = (a + b) / (t * s) * p;
  return RationalMatrix{{-b * p, q, -b * (2 * b + g) * r},
                        {a * p, q, -a * (2 * a + g) * r},
                        {(a - b) * p, 2 * q, (2 * a + g) * (2 * b + g) * r}};
}

RationalMatrix q_tilde_lambda_form(const HGParams& p) {
  auto L = [&](const char* s) { return lambda(s, p); };
  const Rational d = require_nonzero(L("+--+"), "lambda(+--+)");
  const Rational e = require_nonzero(L("+-++"), "lambda(+-++)");
  const Rational mid = 2 * L("+000") * L("0+0-") / d;
  return RationalMatrix{{2 * L("00+0"), mid, -2 * L("00+0") * L("+0-0") * L("+++-") / (d * e)},
                        {2 * L("+000"), mid, -2 * L("+000") * L("+0-0") / d},
                        {2 * L("+0+0"), 2 * mid, -2 * L("+0-0") * L("+++-") / d}};
}

RationalMatrix integral_solution_matrix(const DFParams& params) {
  const Rational &a = params.a, &b = params.b, &g = params.g;
  const Rational s = require_nonzero(2 * a + 2 * b + g, "2a+2b+g");
  const Rational t = require_nonzero(2 * a + g, "2a+g");
  const Rational m = -a * (a + b + g) / s;
  return RationalMatrix{{-b, m, -b * (a + b) * (2 * b + g) / (t * s)},
                        {a, m, -a * (a + b) / s},
                        {a - b, 2 * m, (a + b) * (2 * b + g) / s}};
}

DFTransformVerdict df_transform_check(const DFParams& params) {
  const HGParams p = params.setting();
  DFTransformVerdict v;
  v.reduction = euler_reduce(p);
  v.Q = build_Q(params);
  v.q_tilde_matches = v.Q == q_tilde_lambda_form(p);
  v.exponent_identities =
      2 * lambda("++00", p) == params.a + params.c && 2 * lambda("0+-0", p) == params.b + params.c;
  v.gamma_mu_identities = p.gamma1 == params.a + params.c + params.g / 2 + 1 &&
                          -lambda("++--", p) == params.g / 2 && lambda("--++", p) == params.g / 2;

  const DFSystem df = build_df(params);
  const RationalMatrix Qinv = inverse(v.Q);
  const RationalMatrix I = RationalMatrix::identity(3);
  const RationalMatrix got0 = v.Q * v.reduction.K0 * Qinv + I * (params.a + params.c);
  const RationalMatrix got1 = v.Q * v.reduction.K1 * Qinv + I * (params.b + params.c);
  v.verdict = true;
  auto compare = [&](const RationalMatrix& got, const RationalMatrix& want, const char* name) {
    for (std::size_t i = 0; i < 3 && v.verdict; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (got(i, j) != want(i, j)) {
          v.verdict = false;
          v.offending = std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          break;
        }
  };
  compare(got0, df.C0, "C0");
  compare(got1, df.C1, "C1");
  return v;
}

std::string to_string(QuadratureScheme scheme) {
  return scheme == QuadratureScheme::power_substitution ? "tanh-sinh/power-substitution" : "tanh-sinh/linear";
}

// ---------------------------------------------------------------------------
// Integral solution

namespace {

struct Integrand {
  double a, b, c, g;
  double G() const { return a + c + g / 2 + 1; }
  double s() const { return a + c + g / 2; }

  static double F(double al, double be, double ga, double t) { return hyp2f1_adaptive(al, be, ga, t).value.real(); }

  // t^s times the product of Gauss functions of component k
  double operator()(int k, double t) const {
    const double G = this->G();
    double prod = 0;
    switch (k) {
      case 0: prod = F(a, 1 - b, G, t) * F(c, a + b + c + g + 1, G, t); break;
      case 1: prod = F(a + 1, -b, G, t) * F(c, a + b + c + g + 1, G, t); break;
      default: prod = F(a, 1 - b, G, t) * F(c + 1, a + b + c + g, G, t); break;
    }
    return std::pow(t, s()) * prod;
  }
};

void check_regime(const DFParams& params, double x) {
  if (!(params.g.sign() > 0)) throw Error(errc::kInvalidInput, "the integral solution needs g/2 > 0", "g");
  if (!((params.a + params.c + params.g / 2 + 1).sign() > 0))
    throw Error(errc::kInvalidInput, "the integral solution needs a + c + g/2 + 1 > 0", "a+c+g/2+1");
  if (!(x > 0 && x < 1)) throw Error(errc::kOutOfRange, "x must lie in (0, 1)", std::to_string(x));
}

}  // namespace

std::array<double, 3> df_integrals(const DFParams& params, double x, const EulerTransformSpec& spec,
                                   double* error_estimate, int* nodes) {
  check_regime(params, x);
  if (spec.mu != params.g / 2) throw Error(errc::kInvalidInput, "Euler exponent must equal g/2", spec.mu.str());
  const Integrand f{params.a.to_double(), params.b.to_double(), params.c.to_double(), params.g.to_double()};
  const double mu = spec.mu.to_double();
  std::array<double, 3> out{};
  double err = 0;
  int used = 0;
  for (int k = 0; k < 3; ++k) {
    QuadratureResult q;
    if (spec.scheme == QuadratureScheme::power_substitution) {
      // x - t = x u^{1/mu} absorbs (x - t)^{mu - 1} into the measure
      q = tanh_sinh_unit(
          [&](double u, double om) {
            const double lu = u > 0.5 ? std::log1p(-om) : std::log(u);
            const double t = -x * std::expm1(lu / mu);
            return t > 0 ? f(k, t) : 0.0;
          },
          1e-14, 1e-8, spec.nodes);
      out[k] = std::pow(x, mu) / mu * q.value;
    } else {
      q = tanh_sinh_unit([&](double u, double om) { return std::pow(om, mu - 1) * f(k, x * u); }, 1e-14, 1e-8,
                         spec.nodes);
      out[k] = x * std::pow(x, mu - 1) * q.value;
    }
    err = std::max(err, q.error_estimate / std::max(std::fabs(q.value), 1e-300));
    used += q.nodes;
  }
  if (error_estimate) *error_estimate = err;
  if (nodes) *nodes = used;
  return out;
}

std::array<double, 3> df_integral_z(const DFParams& params, double x, const EulerTransformSpec& spec) {
  const auto I = df_integrals(params, x, spec);
  const Matrix<double> M = to_double(integral_solution_matrix(params));
  const double pre = std::pow(x, (params.a + params.c).to_double()) * std::pow(1 - x, (params.b + params.c).to_double());
  std::array<double, 3> z{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) z[i] += pre * M(i, j) * I[j];
  return z;
}

DFIntegralResult df_integral_solution(const DFParams& params, double x, const EulerTransformSpec& spec) {
  check_regime(params, x);
  DFIntegralResult out;
  out.integrals = df_integrals(params, x, spec, &out.quadrature_error, &out.nodes_used);
  out.z = df_integral_z(params, x, spec);

  const double h = 1e-4 * x * (1 - x);
  const auto zp1 = df_integral_z(params, x + h, spec), zm1 = df_integral_z(params, x - h, spec);
  const auto zp2 = df_integral_z(params, x + 2 * h, spec), zm2 = df_integral_z(params, x - 2 * h, spec);
  const DFSystem df = build_df(params);
  const Matrix<double> C0 = to_double(df.C0), C1 = to_double(df.C1);
  double scale = 0;
  for (double v : out.z) scale = std::max(scale, std::fabs(v));
  for (std::size_t i = 0; i < 3; ++i) {
    const double dz = (-zp2[i] + 8 * zp1[i] - 8 * zm1[i] + zm2[i]) / (12 * h);
    double rhs = 0;
    for (std::size_t j = 0; j < 3; ++j) rhs += (C0(i, j) / x + C1(i, j) / (x - 1)) * out.z[j];
    out.residual = std::max(out.residual, std::fabs(dz - rhs));
  }
  out.relative_residual = scale > 0 ? out.residual / scale : out.residual;
  return out;
}

DFIntegralResult df_integral_solution(const DFParams& params, double x) {
  return df_integral_solution(params, x, EulerTransformSpec{params.g / 2});
}

}  // namespace okubo
