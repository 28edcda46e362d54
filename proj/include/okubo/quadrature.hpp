#pragma once

#include <functional>

namespace okubo {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;  // |last level - previous level|
  int levels = 0;
  int nodes = 0;
};

/// Double-exponential (tanh-sinh) rule on [0, 1]. The integrand receives both
/// u and 1 - u, the latter computed without cancellation, so endpoint
/// singularities may be evaluated through the complement.
///
/// Levels halve the step until successive estimates agree to `rel_tol`
/// relative or `max_nodes` evaluations are spent. The result is accepted if
/// the last difference is within `accept_tol` relative; otherwise
/// Error(quadrature_nonconvergence) is thrown with the estimate as context.
QuadratureResult tanh_sinh_unit(const std::function<double(double u, double one_minus_u)>& f,
                                double rel_tol = 1e-14, double accept_tol = 1e-8, int max_nodes = 4096);

}  // namespace okubo
