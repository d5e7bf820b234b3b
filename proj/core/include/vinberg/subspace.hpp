#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "vinberg/matrix.hpp"

namespace vinberg {

/// A subspace of Q^n stored by its reduced row-echelon basis.
///
/// The stored basis is canonical: two Subspace values describe the same set
/// exactly when their bases are equal entry-wise, so `==` is set equality.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient);

  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const RVector> vectors);
  /// Row space of `m`.
  static Subspace row_space(const RMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const RMatrix& basis() const { return basis_; }
  RVector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<RVector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Subtracts the basis component at each pivot; the result is zero iff v is in the subspace.
  RVector reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v with respect to basis(); throws std::invalid_argument if v is not contained.
  RVector coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
  /// Orders by dimension, then lexicographically by basis entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  RMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
/// Zassenhaus intersection: one RREF of the block matrix [[U, U], [V, 0]].
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, std::span<const Rational> w);

/// Null space {v : m v = 0} in canonical form.
Subspace kernel(const RMatrix& m);

}  // namespace vinberg
