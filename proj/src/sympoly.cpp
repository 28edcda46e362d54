#include "okubo/sympoly.hpp"

#include <sstream>

#include "okubo/error.hpp"

namespace okubo {

SymPoly::SymPoly(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  add_term(Exponents(nvars, 0), constant);
}

SymPoly SymPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(errc::kOutOfRange, "variable index out of range");
  SymPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymPoly::require_compatible(const SymPoly& o) const {
  if (nvars_ != o.nvars_) throw Error(errc::kDimensionMismatch, "polynomial rings differ");
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.require_compatible(b);
  SymPoly out(a.nvars_);
  SymPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

SymPoly SymPoly::pow(int k) const {
  SymPoly acc(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

SymPoly SymPoly::substitute(std::size_t index, const SymPoly& value) const {
  require_compatible(value);
  SymPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[index] = 0;
    SymPoly mono(nvars_);
    mono.add_term(rest, c);
    out += mono * value.pow(e[index]);
  }
  return out;
}

SymPoly SymPoly::substitute_square(std::size_t index, const SymPoly& square_value) const {
  require_compatible(square_value);
  SymPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[index] = e[index] % 2;
    SymPoly mono(nvars_);
    mono.add_term(rest, c);
    out += mono * square_value.pow(e[index] / 2);
  }
  return out;
}

Rational SymPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error(errc::kDimensionMismatch, "evaluation point has wrong arity");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < nvars_; ++k) t *= okubo::pow(point[k], e[k]);
    acc += t;
  }
  return acc;
}

std::string SymPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << "(" << c.str() << ")";
    first = false;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      os << "*" << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

}  // namespace okubo
