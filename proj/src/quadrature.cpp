#include "okubo/quadrature.hpp"

#include <cmath>
#include <string>

#include "okubo/error.hpp"

namespace okubo {

namespace {

// Beyond this abscissa the complement underflows to ~1e-166; weights there
// only matter for integrands with (1 - u)^s, s close to -1.
constexpr double kTauMax = 5.5;

struct Node {
  double u, one_minus_u, weight;
};

Node node(double tau) {
  const double s = 0.5 * M_PI * std::sinh(tau);
  const double e = std::exp(-2 * std::fabs(s));
  // u = (1 + tanh s)/2, computed from the side that avoids cancellation
  const double small = e / (1 + e);
  const double large = 1 / (1 + e);
  const double ch = std::cosh(s);
  const double w = 0.25 * M_PI * std::cosh(tau) / (ch * ch);
  return s >= 0 ? Node{large, small, w} : Node{small, large, w};
}

}  // namespace

QuadratureResult tanh_sinh_unit(const std::function<double(double, double)>& f, double rel_tol, double accept_tol,
                                int max_nodes) {
  auto eval = [&](double tau) {
    const Node n = node(tau);
    if (n.u <= 0 || n.one_minus_u <= 0 || n.weight == 0) return 0.0;
    return n.weight * f(n.u, n.one_minus_u);
  };

  QuadratureResult out;
  double h = 1;
  double sum = eval(0);
  out.nodes = 1;
  for (double tau = h; tau <= kTauMax; tau += h) {
    sum += eval(tau) + eval(-tau);
    out.nodes += 2;
  }
  double estimate = h * sum;
  double diff = INFINITY;
  for (int level = 1;; ++level) {
    const int fresh = 2 * static_cast<int>(std::floor(kTauMax / h + 0.5));
    if (out.nodes + fresh > max_nodes) break;
    h /= 2;
    // new abscissae are the odd multiples of the halved step
    for (double tau = h; tau <= kTauMax; tau += 2 * h) {
      sum += eval(tau) + eval(-tau);
      out.nodes += 2;
    }
    const double next = h * sum;
    diff = std::fabs(next - estimate);
    estimate = next;
    out.levels = level;
    if (diff <= rel_tol * std::fabs(estimate) || (estimate == 0 && diff == 0)) break;
  }
  out.value = estimate;
  out.error_estimate = diff;
  if (!(diff <= accept_tol * std::max(std::fabs(estimate), 1e-300)))
    throw Error(errc::kQuadrature, "quadrature did not converge within the node budget",
                "difference " + std::to_string(diff) + " at value " + std::to_string(estimate));
  return out;
}

}  // namespace okubo
