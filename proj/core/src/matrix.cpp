#include "vinberg/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "vinberg/errors.hpp"

namespace vinberg {

RVector zero_vector(std::size_t n) { return RVector(n); }

RVector unit_vector(std::size_t n, std::size_t i) {
  RVector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RVector operator+(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector length mismatch");
  RVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RVector operator-(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector length mismatch");
  RVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RVector operator*(const Rational& s, const RVector& v) {
  RVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

void axpy(const Rational& s, std::span<const Rational> x, RVector& y) {
  if (x.size() != y.size()) throw AmbientMismatch("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += s * x[i];
  }
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector length mismatch");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

RMatrix::RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_rows(std::span<const RVector> rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AmbientMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RMatrix RMatrix::from_columns(std::span<const RVector> columns, std::size_t rows) {
  RMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw AmbientMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RVector RMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return RVector(s.begin(), s.end());
}

RVector RMatrix::column(std::size_t c) const {
  RVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RMatrix RMatrix::inverse() const {
  if (!is_square()) throw SingularMatrix("inverse of a non-square matrix");
  const std::size_t n = rows_;
  auto echelon = rref(hstack(identity(n)));
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= echelon.pivots.size() || echelon.pivots[i] != i) throw SingularMatrix("matrix is singular");
  }
  RMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = echelon.reduced(r, n + c);
  return inv;
}

Rational RMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  RMatrix a(*this);
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Rational RMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RMatrix::is_zero() const { return vinberg::is_zero(data_); }

RVector RMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw AmbientMismatch("matrix-vector shape mismatch");
  RVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row_span(r), v);
  return out;
}

RMatrix RMatrix::vstack(const RMatrix& other) const {
  if (rows_ != 0 && other.rows_ != 0 && cols_ != other.cols_) throw AmbientMismatch("vstack column mismatch");
  RMatrix m(rows_ + other.rows_, rows_ == 0 ? other.cols_ : cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

RMatrix RMatrix::hstack(const RMatrix& other) const {
  if (rows_ != other.rows_) throw AmbientMismatch("hstack row mismatch");
  RMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

RMatrix& RMatrix::operator+=(const RMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw AmbientMismatch("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw AmbientMismatch("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) throw AmbientMismatch("matrix product shape mismatch");
  RMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

RMatrix operator*(const Rational& s, RMatrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string RMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

RowEchelon rref(const RMatrix& m) {
  RowEchelon out{m, 0, {}};
  RMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(pivot, c), a(lead, c));
    }
    Rational scale = a(lead, col);
    if (scale != Rational(1)) {
      for (std::size_t c = col; c < cols; ++c) a(lead, c) /= scale;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!a(lead, c).is_zero()) a(r, c) -= f * a(lead, c);
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

}  // namespace vinberg
