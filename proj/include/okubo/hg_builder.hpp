#pragma once

#include <array>
#include <string>
#include <string_view>

#include "okubo/matrix.hpp"
#include "okubo/okubo_system.hpp"
#include "okubo/poly.hpp"
#include "okubo/rational.hpp"

namespace okubo {

/// Parameters of the two Gauss functions 2F1(alpha_j, beta_j, gamma_j; x).
struct HGParams {
  Rational alpha1, beta1, alpha2, beta2;
  Rational gamma1, gamma2;

  /// gamma1 = gamma2 = (alpha1 + alpha2 + beta1 + beta2) / 2 + 1.
  static HGParams okubo(const Rational& alpha1, const Rational& beta1, const Rational& alpha2,
                        const Rational& beta2);
  static Rational okubo_gamma(const Rational& alpha1, const Rational& beta1, const Rational& alpha2,
                              const Rational& beta2);

  bool okubo_constrained() const;
};

enum class Sign : int { minus = -1, zero = 0, plus = 1 };

/// Sign pattern (i1, i2, i3, i4) acting on (alpha1, alpha2, beta1, beta2).
/// Note the ordering: the two alphas first, then the two betas.
class LambdaIndex {
 public:
  constexpr LambdaIndex(Sign s1, Sign s2, Sign s3, Sign s4) : s_{s1, s2, s3, s4} {}
  /// Parses four characters from {+, -, 0}, e.g. "+-0+".
  static LambdaIndex parse(std::string_view pattern);

  const std::array<Sign, 4>& signs() const { return s_; }
  LambdaIndex flipped() const;
  std::string str() const;

 private:
  std::array<Sign, 4> s_;
};

/// (i1 alpha1 + i2 alpha2 + i3 beta1 + i4 beta2) / 2.
Rational lambda(const LambdaIndex& idx, const HGParams& p);
/// Shorthand: lambda("++--", p).
Rational lambda(std::string_view pattern, const HGParams& p);

/// dw/dx = (H0/x + H1/(x-1)) w.
struct FuchsianSystem {
  RationalMatrix residue_at_0;
  RationalMatrix residue_at_1;
  std::string tag;

  RationalMatrix residue_at_infinity() const { return -(residue_at_0 + residue_at_1); }
};

/// Residues H0, H1 of the system satisfied by
/// w = (f1 f2, x f1' f2, x f1 f2', x^2 f1' f2').
FuchsianSystem build_product_system(const HGParams& p);

/// (t - a1 - a2)(t - b1 - b2)(t - a1 - b2)(t - b1 - a2): the characteristic
/// polynomial det(tI + H0 + H1) in factored form.
Poly phi_polynomial(const HGParams& p);

struct RiemannScheme {
  std::array<Rational, 4> at_zero;
  std::array<Rational, 4> at_one;
  std::array<Rational, 4> at_infinity;
};
RiemannScheme riemann_scheme(const HGParams& p);

/// H0, H1 with both gammas replaced by (alpha1 + alpha2 + beta1 + beta2)/2 + 1.
FuchsianSystem build_okubo_substituted(const HGParams& p);
/// The same residues written through lambda values.
FuchsianSystem okubo_residues_lambda_form(const HGParams& p);

/// w = x^{lambda(----)} P u.
RationalMatrix build_P(const HGParams& p);
/// lambda(----) lambda(++--) lambda(+-+-) lambda(+--+).
Rational det_P_formula(const HGParams& p);
/// Closed-form inverse of P as a lambda expression.
RationalMatrix closed_form_P_inverse(const HGParams& p);
/// Closed-form A0 as a lambda expression.
RationalMatrix closed_form_A0(const HGParams& p);

struct OkuboZero {
  RationalMatrix P;
  RationalMatrix P_inverse;
  /// P^{-1}(H0~ - lambda(----) I)P and P^{-1} H1~ P.
  RationalMatrix conjugated_zero_residue;
  RationalMatrix conjugated_one_residue;
  /// A0 with exponents (lambda(++++), lambda(-+-+), lambda(++--), lambda(+--+)).
  OkuboSystem system;
};

/// Requires okubo-constrained parameters; throws Error(degenerate_parameters)
/// when det P vanishes.
OkuboZero build_okubo_zero(const HGParams& p);

/// Rows are left eigenvectors of A0 for lambda(++--), -lambda(++--),
/// lambda(+--+), -lambda(+--+), each normalized to first entry 1.
RationalMatrix build_R(const HGParams& p);
Rational det_R_formula(const HGParams& p);
/// Closed form of R P^{-1} in terms of 1/alpha_j, 1/beta_j.
RationalMatrix closed_form_RP_inverse(const HGParams& p);
/// diag(lambda(++--) J, lambda(+--+) J).
RationalMatrix diagonal_form(const HGParams& p);

}  // namespace okubo
