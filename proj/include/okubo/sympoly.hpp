#pragma once

#include <map>
#include <string>
#include <vector>

#include "okubo/rational.hpp"

namespace okubo {

/// Sparse multivariate polynomial over the rationals with a fixed variable
/// count. Used to check polynomial identities symbolically, e.g. after
/// substituting one variable by a polynomial in the others.
class SymPoly {
 public:
  using Exponents = std::vector<int>;

  explicit SymPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  SymPoly(std::size_t nvars, const Rational& constant);

  /// The polynomial x_index in an nvars-variable ring.
  static SymPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Replaces every power x_index^k by value^k.
  SymPoly substitute(std::size_t index, const SymPoly& value) const;
  /// Replaces x_index^(2m + e) by value^m x_index^e, i.e. rewrites even powers of
  /// x_index through a given expression for its square.
  SymPoly substitute_square(std::size_t index, const SymPoly& square_value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& s);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
  friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  SymPoly pow(int k) const;
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void require_compatible(const SymPoly& o) const;

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace okubo
