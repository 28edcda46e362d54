#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "okubo/error.hpp"
#include "okubo/poly.hpp"
#include "okubo/rational.hpp"

namespace okubo {

/// Dense row-major matrix over a commutative ring T (Rational, Poly, double).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<T>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix transpose() const;
  T trace() const;
  bool is_zero() const;

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const T& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix mat_mul(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
      throw Error(errc::kDimensionMismatch, "matrix product dimension mismatch",
                  std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) + " * " +
                      std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& l = lhs(i, k);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += l * rhs(k, j);
      }
    return out;
  }

 private:
  void require_same_shape(const Matrix& o) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;
using RationalVector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Template definitions

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(errc::kDimensionMismatch, "ragged matrix literal");
    for (const auto& v : r) data_.push_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Matrix<T> Matrix<T>::diagonal(const std::vector<T>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

template <class T>
Matrix<T> Matrix<T>::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(errc::kDimensionMismatch, "block out of range");
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

template <class T>
void Matrix<T>::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(errc::kDimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

template <class T>
T Matrix<T>::trace() const {
  T acc(0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) acc += (*this)(i, i);
  return acc;
}

template <class T>
bool Matrix<T>::is_zero() const {
  for (const auto& v : data_)
    if (!(v == T(0))) return false;
  return true;
}

template <class T>
void Matrix<T>::require_same_shape(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(errc::kDimensionMismatch, "matrix shape mismatch");
}

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator*=(const T& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

template <class T>
Matrix<T> Matrix<T>::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

/// Matrix-vector product.
template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  if (m.cols() != v.size()) throw Error(errc::kDimensionMismatch, "matrix-vector dimension mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// Row-vector times matrix.
template <class T>
std::vector<T> row_times(const std::vector<T>& v, const Matrix<T>& m) {
  if (m.rows() != v.size()) throw Error(errc::kDimensionMismatch, "vector-matrix dimension mismatch");
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j] += v[i] * m(i, j);
  return out;
}

/// Determinant by cofactor expansion; valid over any commutative ring.
/// Intended for the small dimensions (<= 4) where it is used on PolyMatrix.
template <class T>
T determinant_laplace(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(errc::kDimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == T(0)) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, c++) = m(i, k);
      }
    T term = m(0, j) * determinant_laplace(minor);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

/// Classical adjugate (transpose of the cofactor matrix) over a commutative ring.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(errc::kDimensionMismatch, "adjugate of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<T> minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      T cof = determinant_laplace(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over the rationals

Rational determinant(const RationalMatrix& m);
/// Throws Error(singular_matrix) if m is not invertible.
RationalMatrix inverse(const RationalMatrix& m);
/// Solves m x = rhs exactly; throws on a singular system.
RationalVector solve(const RationalMatrix& m, const RationalVector& rhs);
/// Reduced row echelon form; pivot columns are reported through `pivot_cols`.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);
/// Basis of {x : m x = 0}; each basis vector has first nonzero entry 1.
std::vector<RationalVector> null_space(const RationalMatrix& m);
/// Basis of {v : v A = xi v}. Throws Error(not_an_eigenvalue) when empty.
std::vector<RationalVector> left_eigenvectors(const RationalMatrix& a, const Rational& eigenvalue);

/// det(zI - m) as an exact polynomial.
Poly characteristic_polynomial(const RationalMatrix& m);

/// Result of poly_adjugate: m * adj = det * I.
struct PolyAdjugate {
  PolyMatrix adj;
  Poly det;
};
PolyAdjugate poly_adjugate(const PolyMatrix& m);

/// Lifts a constant matrix into PolyMatrix.
PolyMatrix to_poly_matrix(const RationalMatrix& m);
/// zI - m as a PolyMatrix.
PolyMatrix resolvent_matrix(const RationalMatrix& m);
RationalMatrix evaluate(const PolyMatrix& m, const Rational& z0);
/// Coefficient matrix of z^k.
RationalMatrix coefficient(const PolyMatrix& m, int k);
/// m(-z) entrywise.
PolyMatrix reflect(const PolyMatrix& m);
Matrix<double> to_double(const RationalMatrix& m);

std::string to_string(const RationalMatrix& m);

/// J = diag(1, -1).
RationalMatrix matrix_J();
/// Block matrix [[a, b], [c, d]] of equal-size square blocks.
RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                        const RationalMatrix& d);

}  // namespace okubo
