#include "okubo/json_io.hpp"

#include <cstdio>

#include "okubo/error.hpp"

namespace okubo {

json to_json(const Rational& r) { return r.str(); }

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json to_json(const Poly& p) { return to_json(p.coeffs()); }

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(errc::kInvalidInput, "expected a rational string \"p/q\"", j.dump());
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(errc::kInvalidInput, "matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw Error(errc::kInvalidInput, "matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(errc::kInvalidInput, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(errc::kInvalidInput, "polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

}  // namespace okubo
