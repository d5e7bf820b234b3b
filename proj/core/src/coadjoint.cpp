#include "vinberg/coadjoint.hpp"

#include "vinberg/errors.hpp"
#include "vinberg/tube_algebra.hpp"

namespace vinberg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string verdict_name(const RepClass& verdict) {
  return std::visit(overloaded{[](const NotUnitarizable&) { return std::string("NotUnitarizable"); },
                               [](const Character&) { return std::string("Character"); },
                               [](const GenericCS&) { return std::string("GenericCS"); },
                               [](const NonGenericCS&) { return std::string("NonGenericCS"); }},
                    verdict);
}

std::string to_string(const RepClass& verdict) {
  return std::visit(
      overloaded{[](const NotUnitarizable&) { return std::string("NotUnitarizable"); },
                 [](const Character&) { return std::string("Character"); },
                 [](const GenericCS& g) {
                   return "GenericCS(" + std::to_string(g.n) + "," + std::to_string(g.nprime) + ")";
                 },
                 [](const NonGenericCS& g) {
                   return "NonGenericCS(" + g.eta3.str() + "," + std::to_string(g.n) + "," +
                          std::to_string(g.nprime) + ")";
                 }},
      verdict);
}

bool is_unitarizable(const RepClass& verdict) { return !std::holds_alternative<NotUnitarizable>(verdict); }

RVector linear_form(const LieAlgebra& algebra, const XiParams& p) {
  RVector xi(algebra.dim());
  xi[algebra.index_of("E1")] = Rational(-p.n, 2);
  xi[algebra.index_of("E2")] = Rational(-p.nprime, 2);
  xi[algebra.index_of("E3")] = p.xi3;
  xi[algebra.index_of("A3")] = p.eta3;
  xi[algebra.index_of("W1")] = Rational(p.n);
  xi[algebra.index_of("W2")] = Rational(p.nprime);
  return xi;
}

RMatrix skew_form_matrix(const LieAlgebra& algebra, const RVector& xi) {
  const std::size_t n = algebra.dim();
  if (xi.size() != n) throw AmbientMismatch("linear form length does not match algebra dimension");
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dot(xi, algebra.structure(i, j));
  return m;
}

Subspace isotropy_algebra(const LieAlgebra& algebra, const RVector& xi) {
  Subspace k = kernel(skew_form_matrix(algebra, xi));
  if (!is_subalgebra(algebra, k)) throw VerificationFailed("isotropy kernel is not a subalgebra");
  return k;
}

RepClass classify(const XiParams& p) {
  if (p.xi3.sign() < 0 && p.n >= 1 && p.nprime >= 1) return GenericCS{p.n, p.nprime};
  if (p.xi3.is_zero() && p.n >= 0 && p.nprime >= 0) {
    if (p.n == 0 && p.nprime == 0) return Character{};
    return NonGenericCS{p.eta3, p.n, p.nprime};
  }
  return NotUnitarizable{};
}

bool equivalent(const XiParams& p, const XiParams& q) {
  const RepClass a = classify(p);
  const RepClass b = classify(q);
  if (!is_unitarizable(a) || !is_unitarizable(b)) {
    throw NotUnitarizableInput("equivalence is only defined between unitarizable parameters");
  }
  // Character parameters (0, eta3, 0, 0) form one singleton class per eta3.
  if (std::holds_alternative<Character>(a) && std::holds_alternative<Character>(b)) return p.eta3 == q.eta3;
  return a == b;
}

bool genericity_crosscheck(const LieAlgebra& algebra, const XiParams& p) {
  const bool generic_by_parameters = std::holds_alternative<GenericCS>(classify(p));
  const Subspace isotropy = isotropy_algebra(algebra, linear_form(algebra, p));
  const bool generic_by_kernel = isotropy == tube_subspaces(algebra).at("<W1,W2>");
  return generic_by_parameters == generic_by_kernel;
}

Subspace root_space(const LieAlgebra& algebra, const std::array<Rational, 3>& alpha) {
  const std::size_t n = algebra.dim();
  Subspace result = tube_subspaces(algebra).at("b");
  const std::array<std::string_view, 3> torus = {"A1", "A2", "A3"};
  for (std::size_t t = 0; t < 3; ++t) {
    RMatrix shifted = ad_matrix(algebra, unit_vector(n, algebra.index_of(torus[t])));
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= alpha[t];
    result = subspace_intersect(result, kernel(shifted));
  }
  return result;
}

std::array<long, 3> root_spaces_q(const LieAlgebra& algebra) {
  std::array<long, 3> q{0, 0, 0};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = k + 1; l < 3; ++l) {
      std::array<Rational, 3> alpha{};
      alpha[l] = Rational(1, 2);
      alpha[k] = Rational(-1, 2);
      q[k] += static_cast<long>(root_space(algebra, alpha).dim());
    }
  }
  return q;
}

bool satisfies_q_bound(const std::array<Rational, 3>& re_s, const std::array<long, 3>& q) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (!(re_s[k] > Rational(q[k], 2))) return false;
  }
  return true;
}

}  // namespace vinberg
