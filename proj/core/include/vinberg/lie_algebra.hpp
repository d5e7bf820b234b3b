#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vinberg/matrix.hpp"
#include "vinberg/subspace.hpp"

namespace vinberg {

/// One basis bracket [x_i, x_j] = sum_k value[k] x_k.
struct BasisBracket {
  std::size_t i = 0;
  std::size_t j = 0;
  RVector value;
};

/// Finite-dimensional Lie algebra over Q given by named basis and structure constants.
///
/// Only one of [x_i, x_j] and [x_j, x_i] needs to be supplied; the mirror is
/// filled in so the table is antisymmetric by construction. Unlisted pairs are
/// zero. The Jacobi identity is *not* assumed; see jacobi_violations().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> names, std::span<const BasisBracket> brackets);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::out_of_range for an unknown name.
  std::size_t index_of(std::string_view name) const;

  /// Coefficients of [x_i, x_j].
  const RVector& structure(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
  RVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Copy with [x_i, x_j] replaced (mirror updated too).
  LieAlgebra with_bracket(std::size_t i, std::size_t j, const RVector& value) const;

  /// All nonzero brackets with i < j, in row-major order.
  std::vector<BasisBracket> nonzero_brackets() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

 private:
  std::vector<std::string> names_;
  std::vector<RVector> table_;
};

/// An element of a specific algebra. Holds a non-owning pointer, so the algebra must outlive it.
class Element {
 public:
  Element(const LieAlgebra& algebra, RVector coeffs);
  static Element zero(const LieAlgebra& algebra);
  static Element basis(const LieAlgebra& algebra, std::size_t i);
  static Element basis(const LieAlgebra& algebra, std::string_view name);

  const LieAlgebra& algebra() const { return *algebra_; }
  const RVector& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const { return vinberg::is_zero(coeffs_); }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element x);
  friend bool operator==(const Element& a, const Element& b);

 private:
  const LieAlgebra* algebra_;
  RVector coeffs_;
};

/// Human-readable linear combination, e.g. "-W1 - 2*E1" or "0".
std::string format_element(const LieAlgebra& algebra, std::span<const Rational> coeffs);
std::string format_element(const Element& x);

/// Throws AlgebraMismatch when x and y belong to different algebras.
Element bracket(const Element& x, const Element& y);

/// Square matrix acting on coordinate columns in the algebra's basis.
struct LinearMap {
  RMatrix matrix;

  std::size_t dim() const { return matrix.rows(); }
  RVector apply(std::span<const Rational> v) const { return matrix.apply(v); }
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return {a.matrix * b.matrix}; }
  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;
};

struct JacobiViolation {
  std::size_t i, j, k;
  RVector defect;
};

/// Checks [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0 over all i < j < k.
std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& algebra);

/// ad x with the convention (ad x)(y) = [x, y]; column j holds [x, x_j].
LinearMap ad_matrix(const Element& x);
RMatrix ad_matrix(const LieAlgebra& algebra, std::span<const Rational> x);

/// Matrix of ad x on an ad(x)-invariant subspace, in the subspace's canonical basis.
/// Throws NotInvariant.
RMatrix ad_restricted(const Element& x, const Subspace& invariant);

/// span{[u, v] : u in U, v in V}
Subspace bracket_subspaces(const LieAlgebra& algebra, const Subspace& u, const Subspace& v);

Subspace ideal_closure(const LieAlgebra& algebra, const Subspace& generators);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);
bool is_subalgebra(const LieAlgebra& algebra, const Subspace& s);

Subspace center(const LieAlgebra& algebra);

/// D_0 = g, D_{k+1} = [D_k, D_k]; stops at the first repeated term (included once).
std::vector<Subspace> derived_series(const LieAlgebra& algebra);
/// C_0 = g, C_{k+1} = [g, C_k]; same stopping rule.
std::vector<Subspace> lower_central_series(const LieAlgebra& algebra);
bool is_solvable(const LieAlgebra& algebra);

/// The subalgebra S as a standalone algebra in the basis of S's canonical rows.
/// Basis names reuse the ambient name when a row is a unit vector, otherwise "v<i>".
/// Throws NotSubalgebra.
LieAlgebra subalgebra(const LieAlgebra& algebra, const Subspace& s);

/// K(x, y) = tr(ad x ad y) in the algebra basis.
RMatrix killing_matrix(const LieAlgebra& algebra);
/// Killing form of S with its own adjoint action. Throws NotSubalgebra.
RMatrix killing_restricted(const LieAlgebra& algebra, const Subspace& s);

/// Maximal solvable ideal, computed as the Killing-orthogonal of [g, g] and then
/// certified as a solvable ideal (throws VerificationFailed otherwise).
Subspace radical(const LieAlgebra& algebra);

/// True iff T[x_i, x_j] = [T x_i, T x_j] for all basis pairs. Throws NotInvertible.
bool check_automorphism(const LieAlgebra& algebra, const LinearMap& t);

struct Quotient {
  LieAlgebra algebra;
  /// (dim g - dim I) x dim g matrix sending g onto g/I.
  RMatrix projection;
  /// Ambient basis indices spanning the complement (non-pivot columns of I).
  std::vector<std::size_t> complement;
};

/// g / I on the complement of I's pivot coordinates. Throws NotAnIdeal, or
/// VerificationFailed if the induced table breaks Jacobi.
Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal);

}  // namespace vinberg
