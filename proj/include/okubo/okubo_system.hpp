#pragma once

#include <optional>
#include <string>

#include "okubo/matrix.hpp"
#include "okubo/rational.hpp"

namespace okubo {

/// Okubo-normal-form system (xI - T) y' = A y with T = diag(0, 0, 1, 1).
///
/// The exponents are the local data the system is built for: (0, 0, a, -a)
/// at x = 0, (0, 0, b, -b) at x = 1 and (c, -c, d, -d) at infinity. A is
/// expected to have the block shape [[aJ, A12], [A21, bJ]] and characteristic
/// polynomial (t^2 - c^2)(t^2 - d^2); the checks are separate so that broken
/// systems can be represented and probed.
struct OkuboSystem {
  RationalMatrix T = standard_T();
  RationalMatrix A;
  Rational a, b, c, d;

  static RationalMatrix standard_T();

  RationalMatrix A12() const { return A.block(0, 2, 2, 2); }
  RationalMatrix A21() const { return A.block(2, 0, 2, 2); }

  bool has_block_form() const;
  bool has_expected_spectrum() const;
};

/// Checks that a, b, c, d, 2a, 2b, 2c, 2d, a+-b, a+-c, a+-d, b+-c, b+-d, c+-d
/// are all non-integers. Returns the name of the first offending quantity.
std::optional<std::string> admissibility_violation(const Rational& a, const Rational& b, const Rational& c,
                                                   const Rational& d);

inline bool is_admissible(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return !admissibility_violation(a, b, c, d).has_value();
}

/// Throws Error(admissibility_violated) naming the failing quantity.
void require_admissible(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

}  // namespace okubo
