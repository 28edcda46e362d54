#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "okubo/accessory.hpp"
#include "okubo/dotsenko_fateev.hpp"
#include "okubo/hg_builder.hpp"
#include "okubo/rational.hpp"

namespace okubo {

/// Seeded source of random rationals p/q with 1 <= |p|, q <= 50. Every
/// rejection loop goes through `draw`, which gives up after 10^4 attempts.
class Sampler {
 public:
  static constexpr int kMaxAttempts = 10000;

  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational next();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Calls `make` until it returns without throwing okubo::Error.
  template <class F>
  auto draw(F&& make, const char* what) -> decltype(make()) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      try {
        return make();
      } catch (const Error&) {
      }
    }
    throw Error(errc::kInternal, "rejection sampling exhausted its attempt budget", what);
  }

  /// Exponents (a, b, c, d) satisfying the admissibility conditions.
  std::array<Rational, 4> admissible();
  /// Product parameters with independent gammas, none a nonpositive integer.
  HGParams generic_params();
  /// Okubo-constrained parameters for which the normal form at zero exists.
  HGParams constrained_params();
  /// A chart with the d-condition solved for r1 from random r2, r3, r4.
  AccessoryChart generic_chart();
  /// Chart of the special accessory values at random admissible exponents.
  AccessoryChart special_chart();
  /// The special chart with r2 shifted and r1 re-solved, so that only the
  /// d-condition survives.
  AccessoryChart perturbed_chart();
  DFParams df_params();

 private:
  std::mt19937_64 rng_;
};

struct CriterionResult {
  std::string id;     // "1a" ... "2d"
  std::string title;
  bool passed = false;
  int cases = 0;
  int failures = 0;
  double max_error = 0;   // exact criteria report 0 or 1 per case
  double tolerance = 0;   // 0 for exact criteria
  double seconds = 0;
  double time_limit = 0;  // 0 when unbounded
  std::string first_failure;
};

/// Identifiers in execution order.
const std::vector<std::string>& criterion_ids();
/// Runs one criterion; the random stream depends only on (seed, id).
CriterionResult run_criterion(const std::string& id, std::uint64_t seed);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);

}  // namespace okubo
