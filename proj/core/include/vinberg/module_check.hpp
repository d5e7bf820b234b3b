#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vinberg/lie_algebra.hpp"

namespace vinberg {

/// Matrices of the action of each basis element of g on upper/lower, in a
/// canonical basis of the quotient. Both subspaces must be ideals with lower in upper.
std::vector<RMatrix> quotient_action(const LieAlgebra& algebra, const Subspace& lower, const Subspace& upper);

/// Coefficients c_0..c_d of det(t I - M), lowest degree first.
RVector characteristic_polynomial(const RMatrix& m);

/// Distinct rational roots of a polynomial given lowest degree first, ascending.
std::vector<Rational> rational_roots(const RVector& poly);

/// True iff some nonzero rational vector is an eigenvector of every matrix.
bool has_common_eigenvector(const std::vector<RMatrix>& action);

/// Exact irreducibility of a module of dimension <= 3 over Q; std::nullopt above that.
std::optional<bool> is_irreducible(const std::vector<RMatrix>& action);

/// Basis of {T : T rho1(x) = rho2(x) T for all x}.
std::vector<RMatrix> intertwiners(const std::vector<RMatrix>& rho1, const std::vector<RMatrix>& rho2);

/// True iff the intertwiner space contains an invertible map. Decided by evaluating
/// det(sum t_i T_i) on the grid {0..d}^k, which is exact since the determinant has
/// degree at most d in each t_i.
bool contains_invertible(const std::vector<RMatrix>& space);

}  // namespace vinberg
