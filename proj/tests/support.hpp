#pragma once

#include <random>
#include <vector>

#include "okubo/matrix.hpp"
#include "okubo/okubo_system.hpp"
#include "okubo/poly.hpp"
#include "okubo/rational.hpp"

namespace okubo::testing {

inline Rational q(const char* s) { return Rational::parse(s); }

inline RationalMatrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const char* s : r) m(i, j++) = Rational::parse(s);
    ++i;
  }
  return m;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recursion; independent
/// of the cofactor expansion used in the library.
inline Poly faddeev_leverrier(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  RationalMatrix M = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const RationalMatrix AM = a * M;
    c[n - k] = -AM.trace() / Rational(static_cast<long>(k));
    M = AM + RationalMatrix::identity(n) * c[n - k];
  }
  return Poly(c);
}

/// Rationals p/q with 1 <= |p|, q <= 50.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    long p = 0;
    while (p == 0) p = num(rng_);
    return Rational(p, den(rng_));
  }

  /// Admissible exponents (a, b, c, d).
  std::array<Rational, 4> admissible() {
    for (;;) {
      std::array<Rational, 4> x{next(), next(), next(), next()};
      if (is_admissible(x[0], x[1], x[2], x[3])) return x;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace okubo::testing
