#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "okubo/hg_builder.hpp"
#include "okubo/matrix.hpp"
#include "okubo/poly.hpp"
#include "okubo/rational.hpp"

namespace okubo {

/// Parameters (a, b, c, g) of the size-three Dotsenko-Fateev system
/// dz/dx = (C0/x + C1/(x-1)) z.
struct DFParams {
  Rational a, b, c, g;

  /// alpha1 = a, alpha2 = c, beta1 = -b, beta2 = a + b + c + g, gammas from
  /// the Okubo constraint.
  HGParams setting() const;
};

struct DFSystem {
  RationalMatrix C0, C1;
};
DFSystem build_df(const DFParams& params);

/// Characteristic-polynomial comparison standing in for a similarity to a
/// diagonal matrix; `distinct` records that the expected eigenvalues are
/// pairwise different, which makes the comparison a similarity proof.
struct SpectrumCheck {
  std::string name;
  Poly charpoly;
  Poly expected;
  bool distinct = false;
  bool holds = false;
};

/// C0 - (a+c)I ~ diag(a+c+g, -a-c, 0), C1 - (b+c)I ~ diag(b+c+g, -b-c, 0),
/// C0 + C1 - (a+b+2c)I ~ diag(g, a+b+g, -a-b).
std::vector<SpectrumCheck> df_spectrum_checks(const DFParams& params);

struct EulerReduction {
  Rational mu;          // lambda(--++)
  RationalMatrix M0;    // R diag(1,1,0,0) (A0 + mu I) R^{-1}
  RationalMatrix M1;    // R diag(0,0,1,1) (A0 + mu I) R^{-1}
  RationalMatrix K0, K1;
  bool first_column_zero = false;
};

/// Reduces the Euler-transformed v-system at mu = lambda(--++) to size three.
EulerReduction euler_reduce(const HGParams& p);
std::vector<SpectrumCheck> reduction_spectrum_checks(const HGParams& p, const EulerReduction& red);

/// Right eigenvectors of C0 + C1 - (a+b+2c)I with the scale of the second and
/// third columns fixed relative to `p_scale` so that C0 and C1 conjugate
/// separately. Throws Error(degenerate_parameters) naming a vanishing factor.
RationalMatrix build_Q(const DFParams& params, const Rational& p_scale = Rational(1));
/// The same matrix at p_scale = 1 written through lambda values of the setting.
RationalMatrix q_tilde_lambda_form(const HGParams& p);
/// Constant matrix in front of the integral vector in the integral solution.
RationalMatrix integral_solution_matrix(const DFParams& params);

struct DFTransformVerdict {
  bool verdict = false;
  std::string offending;  // e.g. "C0(2,3)" on mismatch
  bool q_tilde_matches = false;
  bool exponent_identities = false;  // 2 lambda(++00) = a+c, 2 lambda(0+-0) = b+c
  bool gamma_mu_identities = false;  // gamma = a+c+g/2+1, mu = -lambda(++--) = g/2
  RationalMatrix Q;
  EulerReduction reduction;
};

/// Checks Q K0 Q^{-1} + (a+c)I = C0 and Q K1 Q^{-1} + (b+c)I = C1 exactly.
DFTransformVerdict df_transform_check(const DFParams& params);

enum class QuadratureScheme { power_substitution, linear };
std::string to_string(QuadratureScheme scheme);

struct EulerTransformSpec {
  Rational mu;  // must equal g/2 for the integral solution
  int nodes = 4096;
  QuadratureScheme scheme = QuadratureScheme::power_substitution;
};

struct DFIntegralResult {
  std::array<double, 3> integrals{};
  std::array<double, 3> z{};
  double residual = 0;
  double relative_residual = 0;
  double quadrature_error = 0;
  int nodes_used = 0;
};

/// Integral vector at x with real branches (x - t)^{mu-1} and (1 - x)^{b+c};
/// the dropped constant phases do not affect the system residual.
std::array<double, 3> df_integrals(const DFParams& params, double x, const EulerTransformSpec& spec,
                                   double* error_estimate = nullptr, int* nodes = nullptr);
std::array<double, 3> df_integral_z(const DFParams& params, double x, const EulerTransformSpec& spec);

/// Requires g/2 > 0, a + c + g/2 + 1 > 0 and 0 < x < 1. The residual uses a
/// five-point central difference with step 1e-4 x (1 - x).
DFIntegralResult df_integral_solution(const DFParams& params, double x, const EulerTransformSpec& spec);
DFIntegralResult df_integral_solution(const DFParams& params, double x);

}  // namespace okubo
