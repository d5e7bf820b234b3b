#include "vinberg/subspace.hpp"

#include <stdexcept>

#include "vinberg/errors.hpp"

namespace vinberg {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw AmbientMismatch("subspaces live in Q^" + std::to_string(u.ambient_dim()) + " and Q^" +
                          std::to_string(v.ambient_dim()));
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(std::size_t ambient) { return row_space(RMatrix::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, std::span<const RVector> vectors) {
  if (vectors.empty()) return Subspace(ambient);
  return row_space(RMatrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const RMatrix& m) {
  auto echelon = rref(m);
  Subspace s(m.cols());
  s.basis_ = RMatrix(echelon.rank, m.cols());
  for (std::size_t r = 0; r < echelon.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = echelon.reduced(r, c);
  s.pivots_ = std::move(echelon.pivots);
  return s;
}

std::vector<RVector> Subspace::basis_vectors() const {
  std::vector<RVector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

RVector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length does not match the ambient dimension");
  RVector w(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    Rational f = w[pivots_[r]];
    if (!f.is_zero()) axpy(-f, basis_.row_span(r), w);
  }
  return w;
}

bool Subspace::contains(std::span<const Rational> v) const { return vinberg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row_span(r))) return false;
  }
  return true;
}

RVector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  RVector coords(dim());
  for (std::size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t col = 0; col < a.ambient_; ++col) {
      if (auto c = a.basis_(r, col) <=> b.basis_(r, col); c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::row_space(u.basis().vstack(v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  const std::size_t n = u.ambient_dim();
  RMatrix block = u.basis().hstack(u.basis()).vstack(v.basis().hstack(RMatrix(v.dim(), n)));
  auto echelon = rref(block);
  std::vector<RVector> rows;
  for (std::size_t r = 0; r < echelon.rank; ++r) {
    if (echelon.pivots[r] < n) continue;
    RVector w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = echelon.reduced(r, n + c);
    rows.push_back(std::move(w));
  }
  return Subspace::span(n, rows);
}

bool contains(const Subspace& u, std::span<const Rational> w) { return u.contains(w); }

Subspace kernel(const RMatrix& m) {
  const std::size_t n = m.cols();
  auto echelon = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.rank; ++r) v[echelon.pivots[r]] = -echelon.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

}  // namespace vinberg
