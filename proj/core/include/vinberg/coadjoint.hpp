#pragma once

#include <array>
#include <string>
#include <variant>

#include "vinberg/lie_algebra.hpp"

namespace vinberg {

/// Parameters of the linear form
///   xi = xi3 E3* + eta3 A3* + (n/2)(2 W1* - E1*) + (n'/2)(2 W2* - E2*).
struct XiParams {
  Rational xi3;
  Rational eta3;
  long n = 0;
  long nprime = 0;
};

struct NotUnitarizable {
  friend bool operator==(const NotUnitarizable&, const NotUnitarizable&) = default;
};
struct Character {
  friend bool operator==(const Character&, const Character&) = default;
};
/// xi3 < 0 and n, n' >= 1. The class forgets xi3 and eta3.
struct GenericCS {
  long n = 0;
  long nprime = 0;
  friend bool operator==(const GenericCS&, const GenericCS&) = default;
};
/// xi3 = 0, n, n' >= 0, (n, n') != (0, 0); one class per eta3.
struct NonGenericCS {
  Rational eta3;
  long n = 0;
  long nprime = 0;
  friend bool operator==(const NonGenericCS&, const NonGenericCS&) = default;
};

using RepClass = std::variant<NotUnitarizable, Character, GenericCS, NonGenericCS>;

std::string verdict_name(const RepClass& verdict);
/// "GenericCS(1,1)", "NonGenericCS(5/2,0,3)", "Character", "NotUnitarizable".
std::string to_string(const RepClass& verdict);
bool is_unitarizable(const RepClass& verdict);

/// Dual-basis coefficients of xi for an algebra with the tube basis.
RVector linear_form(const LieAlgebra& algebra, const XiParams& p);

/// Matrix of (x, y) -> xi([x, y]).
RMatrix skew_form_matrix(const LieAlgebra& algebra, const RVector& xi);

/// g_xi = {x : xi([x, y]) = 0 for all y}; verified to be a subalgebra.
Subspace isotropy_algebra(const LieAlgebra& algebra, const RVector& xi);

RepClass classify(const XiParams& p);

/// Throws NotUnitarizableInput unless both parameter sets are unitarizable.
bool equivalent(const XiParams& p, const XiParams& q);

/// Compares the closed-form genericity verdict with the isotropy route
/// (g_xi == <W1, W2>); true when they agree.
bool genericity_crosscheck(const LieAlgebra& algebra, const XiParams& p);

/// b_alpha = {x in b : [y, x] = alpha(y) x for y in <A1, A2, A3>} with alpha
/// given by its values on (A1, A2, A3).
Subspace root_space(const LieAlgebra& algebra, const std::array<Rational, 3>& alpha);

/// q_k = sum over l > k of dim b_{(A_l* - A_k*)/2}.
std::array<long, 3> root_spaces_q(const LieAlgebra& algebra);

/// Re s_k > q_k / 2 for k = 1, 2, 3.
bool satisfies_q_bound(const std::array<Rational, 3>& re_s, const std::array<long, 3>& q);

}  // namespace vinberg
