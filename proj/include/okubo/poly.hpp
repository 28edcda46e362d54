#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "okubo/rational.hpp"

namespace okubo {

/// Dense univariate polynomial in z with exact rational coefficients.
/// coeffs()[k] is the coefficient of z^k; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);             // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly z() { return Poly{Rational(0), Rational(1)}; }
  /// Monomial c z^k.
  static Poly monomial(const Rational& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coefficient(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& z0) const;
  double operator()(double z0) const;

  /// p(-z).
  Poly reflected() const;
  /// p(z + shift).
  Poly shifted(const Rational& shift) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form such as "z^2 - 1/4".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Product of (z - root) over the given roots.
Poly poly_from_roots(const std::vector<Rational>& roots);

}  // namespace okubo
