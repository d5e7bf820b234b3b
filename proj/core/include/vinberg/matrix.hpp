#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vinberg/rational.hpp"

namespace vinberg {

using RVector = std::vector<Rational>;

RVector zero_vector(std::size_t n);
RVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator*(const Rational& s, const RVector& v);
/// y += s * x
void axpy(const Rational& s, std::span<const Rational> x, RVector& y);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix of exact rationals. Shape is fixed at construction.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix from_rows(std::span<const RVector> rows, std::size_t cols);
  static RMatrix from_columns(std::span<const RVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RVector row(std::size_t r) const;
  RVector column(std::size_t c) const;

  RMatrix transpose() const;
  RMatrix inverse() const;  // throws SingularMatrix
  Rational determinant() const;
  Rational trace() const;
  bool is_zero() const;
  RVector apply(std::span<const Rational> v) const;

  /// Stack `other` below this matrix (column counts must agree).
  RMatrix vstack(const RMatrix& other) const;
  RMatrix hstack(const RMatrix& other) const;

  RMatrix& operator+=(const RMatrix& other);
  RMatrix& operator-=(const RMatrix& other);
  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator*(const Rational& s, RMatrix m);
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RMatrix reduced;  // same shape as the input; zero rows kept at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(const RMatrix& m);

}  // namespace vinberg
