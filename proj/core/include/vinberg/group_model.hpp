#pragma once

#include <array>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vinberg/lie_algebra.hpp"
#include "vinberg/matrix.hpp"

namespace vinberg {

/// [[a, b], [c, d]] with ad - bc = 1.
struct SL2 {
  Rational a{1}, b{0}, c{0}, d{1};
  friend bool operator==(const SL2&, const SL2&) = default;
};

SL2 operator*(const SL2& x, const SL2& y);
SL2 inverse(const SL2& x);

/// Free coordinates of the 6x6 linear group. The derived entries are
/// lambda_i = a3 (a_i lambda_i' + c_i mu_i') and mu_i = a3 (b_i lambda_i' + d_i mu_i').
struct GroupParams {
  SL2 sl2_1;
  SL2 sl2_2;
  Rational a3{1};
  Rational lambda1p, mu1p, lambda2p, mu2p, kappa;
  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Element of the 6x6 realization of G. Always a member.
class GroupElement {
 public:
  GroupElement();  // identity

  /// Throws BadDeterminant or NonPositiveA3.
  static GroupElement from_params(const GroupParams& p);
  /// Throws NotAMember.
  static GroupElement from_matrix(const RMatrix& m);

  const RMatrix& matrix() const { return matrix_; }
  const GroupParams& params() const { return params_; }

  /// Exact 6x6 inverse, re-validated as a member.
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h) { return g.matrix_ == h.matrix_; }

 private:
  GroupElement(RMatrix m, GroupParams p) : matrix_(std::move(m)), params_(std::move(p)) {}
  RMatrix matrix_;
  GroupParams params_;
};

/// Zero pattern, a3 > 0, (6,6) = 1/a3, SL2 determinants and the lambda/mu constraints.
bool is_member(const RMatrix& m);

/// The twelve generator matrices in the order E1, E2, E3, E31, E32, A1, A2, A3, A31, A32, W1, W2.
const std::array<RMatrix, 12>& basis_matrices();

/// sum_i coeffs[i] * basis_matrices()[i]
RMatrix algebra_matrix(std::span<const Rational> coeffs);

/// Inverse of algebra_matrix. Throws ExpansionFailed outside the span.
RVector expand_in_basis(const RMatrix& m);

struct ModelMismatch {
  std::size_t i = 0, j = 0;
  RVector expected;  // structure constants of the algebra
  RVector actual;    // expansion of the matrix commutator
};

/// Compares [X_i, X_j] with the algebra's brackets over all pairs i < j.
/// Throws AlgebraMismatch unless the algebra uses the tube basis.
std::vector<ModelMismatch> verify_model(const LieAlgebra& algebra);

/// Ad(g) x = g X g^-1, expanded in the basis of x's algebra.
Element adjoint(const GroupElement& g, const Element& x);
/// Matrix of Ad(g) on the 12 basis coordinates.
LinearMap adjoint_map(const GroupElement& g);

/// Image in R_{>0} x SL2 x SL2.
struct QuotientImage {
  Rational gamma{1};
  SL2 g1;
  SL2 g2;
  friend bool operator==(const QuotientImage&, const QuotientImage&) = default;
};

QuotientImage quotient_phi(const GroupElement& g);
QuotientImage operator*(const QuotientImage& s, const QuotientImage& t);
QuotientImage inverse(const QuotientImage& t);

/// Bounded rational sampler: SL2 entries in [-2, 2] with |a| >= 1/2, a3 in {1/2, 1, ..., 4},
/// the other free parameters p/q with |p|, q <= 8 clipped to [-2, 2].
GroupParams random_group_params(std::mt19937_64& rng);

std::string group_params_to_json(const GroupParams& p);
/// Accepts the keys written by group_params_to_json; every value is a rational string.
/// Missing keys take identity values. Throws ParseError.
GroupParams parse_group_params(std::string_view json_text);

}  // namespace vinberg
