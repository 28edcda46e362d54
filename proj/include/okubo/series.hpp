#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "okubo/hg_builder.hpp"
#include "okubo/matrix.hpp"
#include "okubo/okubo_system.hpp"
#include "okubo/rational.hpp"

namespace okubo {

using Complex = std::complex<double>;
using CVector4 = std::array<Complex, 4>;

// ---------------------------------------------------------------------------
// Gauss hypergeometric series

/// Truncated 2F1 with its first two derivatives. `last_term` is |c_{N-1} x^{N-1}|,
/// the magnitude of the final summed term.
struct Hyp2F1Jet {
  Complex value, d1, d2;
  double last_term = 0;
  int terms = 0;
};

/// Sums `terms` terms. Throws Error(invalid_input) for gamma in {0, -1, -2, ...}
/// and Error(outside_disc) for |x| >= 1.
Hyp2F1Jet hyp2f1_jet(double alpha, double beta, double gamma, Complex x, int terms);
Hyp2F1Jet hyp2f1_jet(const Rational& alpha, const Rational& beta, const Rational& gamma, Complex x, int terms);
Complex hyp2f1(double alpha, double beta, double gamma, Complex x, int terms);

/// Sums until three consecutive terms (weighted for the second derivative)
/// fall below `tol` relative to the running value.
Hyp2F1Jet hyp2f1_adaptive(double alpha, double beta, double gamma, Complex x, double tol = 1e-17,
                          int max_terms = 200000);

// ---------------------------------------------------------------------------
// Product vectors

struct VectorJet {
  CVector4 value;
  CVector4 derivative;
};

/// w = (f1 f2, x f1' f2, x f1 f2', x^2 f1' f2') and dw/dx, with
/// f_j = 2F1(alpha_j, beta_j, gamma_j; x). `terms <= 0` selects adaptive summation.
VectorJet product_vector_w(const HGParams& p, Complex x, int terms);

/// max |dw/dx - (H0/x + H1/(x-1)) w|.
double product_system_residual(const HGParams& p, Complex x, int terms);

/// u = x^{-lambda(----)} P^{-1} w, the solution of the Okubo system for A0.
VectorJet okubo_vector_u(const HGParams& p, Complex x, int terms);
double okubo_chain_residual(const HGParams& p, Complex x, int terms);

struct VVector {
  CVector4 via_transform;  // x^{gamma1 - 1} R P^{-1} w
  CVector4 via_products;   // products of contiguous Gauss functions
  CVector4 derivative;     // d/dx of via_transform
  double max_relative_gap = 0;
};

/// Requires okubo-constrained parameters and x off the cut (-inf, 0].
VVector v_vector(const HGParams& p, Complex x, int terms);
/// max |dv/dx - R (xI - T)^{-1} R^{-1} diag(lambda(++--) J, lambda(+--+) J) v|.
double v_system_residual(const HGParams& p, Complex x, int terms);

// ---------------------------------------------------------------------------
// Local series of Okubo systems

enum class BasePoint { zero, one, infinity };
std::string to_string(BasePoint base);
BasePoint parse_base_point(const std::string& text);

/// Exponent for an index in 0..3. At 0: (0, 0, a, -a); at 1: (0, 0, b, -b);
/// at infinity: (c, -c, d, -d). Indices 0 and 1 at a finite point select the
/// two independent solutions of the doubled exponent 0.
Rational local_exponent(const OkuboSystem& sys, BasePoint base, int exponent_index);

/// y = sum_r coeffs[r] t^{r + rho} with t = x (base 0) or t = x - 1 (base 1);
/// y = sum_s coeffs[s] t^{-s - sigma} with t = x - 1 (base infinity).
template <class S>
struct SeriesSolution {
  BasePoint base = BasePoint::one;
  int exponent_index = 0;
  Rational exponent;
  std::vector<std::array<S, 4>> coeffs;

  std::string variable() const;
  int terms() const { return static_cast<int>(coeffs.size()); }
};

using ExactSeries = SeriesSolution<Rational>;
using FloatSeries = SeriesSolution<double>;

/// Builds `terms` coefficient vectors. Requires admissible exponents; throws
/// Error(out_of_range) for an exponent index outside 0..3.
template <class S>
SeriesSolution<S> local_series(const OkuboSystem& sys, BasePoint base, int exponent_index, int terms);

/// Largest defect of the defining recurrence, the initial condition and the
/// trailing constraint, relative to the coefficient scale. Exactly 0 for exact
/// series.
template <class S>
double recurrence_defect(const OkuboSystem& sys, const SeriesSolution<S>& sol);

struct SeriesValue {
  CVector4 y;
  CVector4 dy;
};

/// Sums the series at x. Throws Error(outside_disc) unless |x| <= 0.6 (base 0),
/// |x - 1| <= 0.6 (base 1) or |x - 1| >= 1.7 (base infinity), or if x is the
/// base point itself. Powers use the principal branch.
template <class S>
SeriesValue evaluate_series(const SeriesSolution<S>& sol, Complex x);

bool inside_evaluation_disc(BasePoint base, Complex x);

/// max |(xI - T) y' - A y|.
double okubo_residual(const Matrix<double>& A, Complex x, const SeriesValue& v);

struct EvalReport {
  std::vector<Complex> sample_points;
  double max_residual = 0;
  int terms_used = 0;
  double truncation_estimate = 0;  // largest |last term| over the samples
};

template <class S>
EvalReport residual_report(const OkuboSystem& sys, const SeriesSolution<S>& sol,
                           const std::vector<Complex>& samples);

/// `count` points on the circle |t| = radius around the base point (t = x or
/// x - 1), staggered off the branch cut.
std::vector<Complex> circle_samples(BasePoint base, int count, double radius);

extern template struct SeriesSolution<Rational>;
extern template struct SeriesSolution<double>;

}  // namespace okubo
