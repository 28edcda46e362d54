#include "okubo/matrix.hpp"

#include <sstream>

namespace okubo {

namespace {

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(errc::kDimensionMismatch, std::string(what) + " of non-square matrix");
}

}  // namespace

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_cols) {
  RationalMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    Rational inv = Rational(1) / r(row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      Rational f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return r;
}

Rational determinant(const RationalMatrix& m) {
  require_square(m, "determinant");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    Rational inv = Rational(1) / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      Rational f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RationalMatrix::identity(n));
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(errc::kSingularMatrix, "matrix is singular", to_string(m));
  }
  return r.block(0, n, n, n);
}

RationalVector solve(const RationalMatrix& m, const RationalVector& rhs) {
  require_square(m, "solve");
  const std::size_t n = m.rows();
  if (rhs.size() != n) throw Error(errc::kDimensionMismatch, "rhs size mismatch");
  RationalMatrix aug(n, n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) aug(i, n) = rhs[i];
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(errc::kSingularMatrix, "singular linear system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r(i, n);
  return x;
}

std::vector<RationalVector> null_space(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    // Normalize so the first nonzero entry is 1.
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      Rational s = Rational(1) / x;
      for (auto& y : v) y *= s;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> left_eigenvectors(const RationalMatrix& a, const Rational& eigenvalue) {
  require_square(a, "left_eigenvectors");
  RationalMatrix shifted = a - RationalMatrix::identity(a.rows()) * eigenvalue;
  auto basis = null_space(shifted.transpose());
  if (basis.empty()) throw Error(errc::kNotAnEigenvalue, "not an eigenvalue", eigenvalue.str());
  return basis;
}

PolyMatrix to_poly_matrix(const RationalMatrix& m) {
  return m.map([](const Rational& x) { return Poly(x); });
}

PolyMatrix resolvent_matrix(const RationalMatrix& m) {
  require_square(m, "resolvent");
  PolyMatrix out = -to_poly_matrix(m);
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += Poly::z();
  return out;
}

Poly characteristic_polynomial(const RationalMatrix& m) { return determinant_laplace(resolvent_matrix(m)); }

PolyAdjugate poly_adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(errc::kDimensionMismatch, "adjugate of non-square matrix");
  return PolyAdjugate{adjugate(m), determinant_laplace(m)};
}

RationalMatrix evaluate(const PolyMatrix& m, const Rational& z0) {
  return m.map([&](const Poly& p) { return p(z0); });
}

RationalMatrix coefficient(const PolyMatrix& m, int k) {
  return m.map([k](const Poly& p) { return p.coefficient(k); });
}

PolyMatrix reflect(const PolyMatrix& m) {
  return m.map([](const Poly& p) { return p.reflected(); });
}

Matrix<double> to_double(const RationalMatrix& m) {
  return m.map([](const Rational& x) { return x.to_double(); });
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

RationalMatrix matrix_J() { return RationalMatrix::diagonal({Rational(1), Rational(-1)}); }

RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                        const RationalMatrix& d) {
  const std::size_t n = a.rows();
  RationalMatrix out(2 * n, 2 * n);
  out.set_block(0, 0, a);
  out.set_block(0, n, b);
  out.set_block(n, 0, c);
  out.set_block(n, n, d);
  return out;
}

}  // namespace okubo
