#include "okubo/okubo_system.hpp"

#include <array>
#include <utility>

#include "okubo/error.hpp"

namespace okubo {

RationalMatrix OkuboSystem::standard_T() {
  return RationalMatrix::diagonal({Rational(0), Rational(0), Rational(1), Rational(1)});
}

bool OkuboSystem::has_block_form() const {
  if (A.rows() != 4 || !A.is_square()) return false;
  const RationalMatrix J = matrix_J();
  return A.block(0, 0, 2, 2) == J * a && A.block(2, 2, 2, 2) == J * b;
}

bool OkuboSystem::has_expected_spectrum() const {
  Poly expected = Poly{-c * c, Rational(0), Rational(1)} * Poly{-d * d, Rational(0), Rational(1)};
  return characteristic_polynomial(A) == expected;
}

std::optional<std::string> admissibility_violation(const Rational& a, const Rational& b, const Rational& c,
                                                   const Rational& d) {
  const std::array<std::pair<const char*, Rational>, 20> items = {{
      {"a", a},         {"b", b},         {"c", c},         {"d", d},
      {"2a", a * 2},    {"2b", b * 2},    {"2c", c * 2},    {"2d", d * 2},
      {"a+b", a + b},   {"a-b", a - b},   {"a+c", a + c},   {"a-c", a - c},
      {"a+d", a + d},   {"a-d", a - d},   {"b+c", b + c},   {"b-c", b - c},
      {"b+d", b + d},   {"b-d", b - d},   {"c+d", c + d},   {"c-d", c - d},
  }};
  for (const auto& [name, value] : items) {
    if (value.is_integer()) return std::string(name) + " = " + value.str() + " is an integer";
  }
  return std::nullopt;
}

void require_admissible(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (auto v = admissibility_violation(a, b, c, d)) {
    throw Error(errc::kAdmissibilityViolated, "admissibility violated", *v);
  }
}

}  // namespace okubo
