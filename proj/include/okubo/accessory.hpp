#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "okubo/hg_builder.hpp"
#include "okubo/matrix.hpp"
#include "okubo/okubo_system.hpp"
#include "okubo/poly.hpp"
#include "okubo/rational.hpp"

namespace okubo {

/// Local exponents (a, b, c, d) plus the projective accessory coordinates
/// (r1 : r2 : r3 : r4) of the parametrized coefficient matrix A1.
struct AccessoryChart {
  Rational a, b, c, d;
  std::array<Rational, 4> r;

  /// Chart nondegeneracy: r1 r2 r3 r4 != 0, r1 != r2, r3 != r4. Returns the failing item.
  std::optional<std::string> r_condition_violation() const;
  /// Left side of the d-condition: the degree-two ratio in r that must equal d^2.
  /// Requires (r1 - r2)(r3 - r4) != 0.
  Rational d_condition_value() const;
  bool satisfies_d_condition() const;

  /// Throws Error(degenerate_chart) or Error(d_condition_fails).
  void validate() const;

  /// t_k = r_k / r4 (k = 1, 2); empty when r4 = 0.
  std::optional<std::pair<Rational, Rational>> accessory_coordinates() const;

  /// Same point with all r scaled so that r[index] == 1.
  AccessoryChart normalized(std::size_t index) const;

  friend bool operator==(const AccessoryChart&, const AccessoryChart&) = default;
};

/// Builds a chart from (a, b, c, d, r2, r3, r4) by solving the d-condition,
/// which is linear in r1. Throws Error(degenerate_chart) if it cannot be solved
/// or the result is a degenerate chart.
AccessoryChart chart_solving_r1(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                const Rational& r2, const Rational& r3, const Rational& r4);

/// Off-diagonal blocks A'12, A'21 of A1.
RationalMatrix accessory_block_12(const AccessoryChart& chart);
RationalMatrix accessory_block_21(const AccessoryChart& chart);

/// A1 = [[aJ, A'12], [A'21, bJ]] for a validated chart.
OkuboSystem parametrize_A1(const AccessoryChart& chart);

struct ChartRecovery {
  RationalMatrix D;
  AccessoryChart chart;
  std::array<Rational, 4> v_c;
  std::array<Rational, 4> v_minus_c;
};

/// Finds the diagonal D with D A D^{-1} = parametrize_A1(chart). The r are
/// recovered projectively (v_{-c} is normalized with its first entry 1).
ChartRecovery recover_chart(const RationalMatrix& A, const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d);

struct EpsilonDelta {
  Rational epsilon, delta, epsilon_prime, delta_prime;
};
EpsilonDelta epsilon_delta(const AccessoryChart& chart);

/// A11(z) = z^3 I + z^2 Q11 + z R11 + S11 and
/// adj A11(z) = z^3 I + z^2 Qt11 + z Rt11 + St11, in closed form.
struct CubicBlockDecomposition {
  RationalMatrix Q11, R11, S11;
  RationalMatrix Qt11, Rt11, St11;

  PolyMatrix A11() const;
  PolyMatrix A11_adjugate() const;
};
CubicBlockDecomposition cubic_blocks(const AccessoryChart& chart);

/// Closed form of A'12 A'21 through epsilon', delta'.
RationalMatrix block_product_closed_form(const AccessoryChart& chart);

/// adj(zI - A) as a polynomial matrix; for A with characteristic polynomial
/// (z^2 - c^2)(z^2 - d^2) this is (z^2 - c^2)(z^2 - d^2)(zI - A)^{-1}.
PolyMatrix resolvent_adjugate(const RationalMatrix& A);

enum class PointPair { one_and_infinity, zero_and_infinity };
enum class Direction { forward, backward };
enum class SystemLabel { g_at_1, h_at_inf, g_at_0, h_at_inf_dual };

std::string to_string(SystemLabel label);
std::string to_string(Direction direction);

/// f(z+1) = (scalar_numerator(z) / scalar_denominator(z)) * numerator(z) f(z).
///
/// `numerator` is the monic cubic matrix polynomial that the substantially-same
/// test compares; scalar factors are kept apart. `source_direction` records
/// whether the originating relation expressed f(z) through f(z+1) (backward)
/// and was inverted into the stored forward form.
struct DifferenceSystem2 {
  PolyMatrix numerator;
  Poly scalar_numerator;
  Poly scalar_denominator;
  Direction source_direction = Direction::forward;
  SystemLabel label = SystemLabel::g_at_1;

  /// Full step matrix at z0; throws if the denominator vanishes there.
  RationalMatrix step(const Rational& z0) const;
};

std::pair<DifferenceSystem2, DifferenceSystem2> difference_systems(const AccessoryChart& chart, PointPair pair);

struct CrossProduct {
  // 1-based entry indices of c_jk(z) b_lm(z) - b_jk(z) c_lm(z).
  int j, k, l, m;
  Poly value;
};

struct SameVerdict {
  bool same = false;
  PointPair pair = PointPair::one_and_infinity;
  EpsilonDelta epsilon_delta;
  bool by_epsilon_delta = false;
  bool by_cross_products = false;
  std::vector<CrossProduct> cross_products;

  std::vector<CrossProduct> nonzero_cross_products() const;
};

/// Decides whether the g- and h-systems of `pair` are substantially the same
/// by two routes: epsilon = delta = 0, and identical vanishing of every 2x2
/// cross product of the cubic numerators. Throws Error(internal_inconsistency)
/// if the routes disagree.
SameVerdict substantially_same(const AccessoryChart& chart, PointPair pair = PointPair::one_and_infinity);

enum class Branch { via_r4, via_r3, automatic };
std::string to_string(Branch branch);

/// ((a + s1 b + s2 c)^2 - d^2) with s1, s2 in {+1, -1}.
Rational branch_factor(const Rational& a, const Rational& b, const Rational& c, const Rational& d, int s1, int s2);

/// The special coefficient matrix singled out by the substantially-same condition.
RationalMatrix special_accessory_matrix(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& d);

struct AccessorySolution {
  AccessoryChart chart;
  RationalMatrix A1;
  Branch branch_used = Branch::via_r4;
};

/// Solves epsilon = delta = 0 for r with r4 = scale (via_r4) or r3 = scale
/// (via_r3). `automatic` tries via_r4 first.
AccessorySolution solve_accessory(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                  Branch branch = Branch::automatic, const Rational& scale = Rational(1));

struct Realization {
  Rational a, b, c, d;
  Rational cond_a_product;  // ((a+b+c)^2 - d^2)((a-b-c)^2 - d^2)
  Rational cond_b_product;  // ((a+b-c)^2 - d^2)((a-b+c)^2 - d^2)
  bool cond_a_lambda_identity = false;
  bool cond_b_lambda_identity = false;
  bool A1_lambda_form_matches = false;
  RationalMatrix A1;
  RationalMatrix A0;
  RationalMatrix D1;
  bool verdict = false;
};

/// Exponents a = lambda(++++), b = lambda(-+-+), c = lambda(++--), d = lambda(+--+).
std::array<Rational, 4> realized_exponents(const HGParams& p);
RationalMatrix realization_D1(const HGParams& p);
RationalMatrix realized_A1_lambda_form(const HGParams& p);

/// Conjugates the special matrix by D1 and compares with A0.
Realization realize(const HGParams& p);

// Symbolic identities behind the special accessory values, checked as exact
// multivariate polynomial identities.
struct SymbolicIdentity {
  std::string name;
  bool holds = false;
  std::string residual;  // "0" when it holds
};

/// For d^2 = (a + s1 b + s2 c)^2:
/// ((a + s1 b - s2 c)^2 - d^2)((a - s1 b + s2 c)^2 - d^2) = s1 s2 16 b c (a + s1 b)(a + s2 c).
SymbolicIdentity conditional_vanishing_identity(int s1, int s2);
/// delta after eliminating r1, r2 through epsilon = 0 and the d-condition.
SymbolicIdentity delta_factorization_identity();
/// The two rewritings of the d-condition numerator through epsilon and delta.
std::vector<SymbolicIdentity> d_condition_rewrites();

}  // namespace okubo
