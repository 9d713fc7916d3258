#pragma once

#include "rhoqes/polynomial.hpp"
#include "rhoqes/rational.hpp"

#include <cstddef>
#include <vector>

namespace rhoqes {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  QMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix scaled(const Rational& c) const;
  bool operator==(const QMatrix& o) const = default;

  std::vector<double> to_doubles() const;  // row-major

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(QMatrix a);
std::size_t rank(QMatrix a);

// Univariate polynomial over Q, coefficient k multiplies x^k.
using UPoly = std::vector<Rational>;
UPoly upoly_mul(const UPoly& a, const UPoly& b);
void upoly_trim(UPoly& p);

// Monic characteristic polynomial det(xI - A) via Hessenberg reduction.
UPoly charpoly(const QMatrix& a);

// Determinant of a square matrix of polynomials (cofactor expansion over
// column subsets, memoized).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace rhoqes
