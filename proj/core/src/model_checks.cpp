#include "vinberg/model_checks.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

#include "vinberg/errors.hpp"
#include "vinberg/group_model.hpp"
#include "vinberg/tube_algebra.hpp"
#include "vinberg/siegel.hpp"

namespace vinberg {

namespace {

Element combination(const LieAlgebra& algebra, const std::map<std::string, Rational>& terms) {
  RVector v(algebra.dim());
  for (const auto& [name, c] : terms) v[algebra.index_of(name)] += c;
  return Element(algebra, std::move(v));
}

// Ad(g^-1) on the generators attached to one SL2 factor (i = 1 or 2).
std::array<std::pair<std::string, Element>, 3> ad_formulas(const LieAlgebra& L, const GroupParams& p, int i) {
  const SL2& s = i == 1 ? p.sl2_1 : p.sl2_2;
  const Rational& lp = i == 1 ? p.lambda1p : p.lambda2p;
  const Rational& mp = i == 1 ? p.mu1p : p.mu2p;
  const Rational& a3 = p.a3;
  const std::string k = std::to_string(i);
  const std::string E = "E" + k, E3k = "E3" + k, A = "A" + k, A3k = "A3" + k, W = "W" + k;
  const Rational &a = s.a, &b = s.b, &c = s.c, &d = s.d;
  return {{
      {E, combination(L, {{E, d * d - c * c}, {"E3", lp * lp}, {E3k, -(d * lp)}, {A, 2 * c * d},
                          {A3k, -(c * lp)}, {W, -(c * c)}})},
      {A3k, combination(L, {{"E3", 2 * mp / a3}, {E3k, b / a3}, {A3k, a / a3}})},
      {W, combination(L, {{E, -(d * d) + c * c - b * b + a * a}, {"E3", -(mp * mp) - lp * lp},
                          {E3k, d * lp - b * mp}, {A, -2 * c * d - 2 * a * b}, {A3k, c * lp - a * mp},
                          {W, c * c + a * a}})},
  }};
}

double point_distance(const SiegelPoint& u, const SiegelPoint& v) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(u.z[k] - v.z[k]));
  return worst;
}

BivariatePolynomial random_polynomial(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<std::vector<Complex>> table(3, std::vector<Complex>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; i + j <= 2; ++j) table[i][j] = Complex(coeff(rng), coeff(rng));
  return BivariatePolynomial(std::move(table));
}

MultiplierParams random_multiplier(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> deg(0, 3);
  std::uniform_real_distribution<double> eta(-2.0, 2.0);
  MultiplierParams p;
  p.n = deg(rng);
  p.nprime = deg(rng);
  p.eta3 = eta(rng);
  return p;
}

}  // namespace

std::size_t ad_formula_mismatches(const LieAlgebra& algebra, const GroupParams& p) {
  const GroupElement gi = GroupElement::from_params(p).inverse();
  std::size_t bad = 0;
  for (int i = 1; i <= 2; ++i) {
    for (const auto& [name, expected] : ad_formulas(algebra, p, i)) {
      if (!(adjoint(gi, Element::basis(algebra, name)) == expected)) ++bad;
    }
  }
  return bad;
}

std::vector<SuiteResult> run_model_suites(std::uint64_t seed, std::size_t samples, double tol) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  const LieAlgebra& L = tube_algebra();
  std::mt19937_64 rng(seed);

  enum Suite : std::size_t {
    kSymplectic,
    kAdFormulas,
    kAdjointHom,
    kPhiHom,
    kActionHom,
    kCocycle,
    kConsistency,
    kCoordinates,
    kIntertwiner,
    kIsotropy,
    kSuiteCount
  };
  std::vector<SuiteResult> r(kSuiteCount);
  r[kSymplectic].name = "symplectic";
  r[kAdFormulas].name = "ad_formulas";
  r[kAdjointHom].name = "adjoint_homomorphism";
  r[kPhiHom].name = "phi_homomorphism";
  r[kActionHom].name = "action_homomorphism";
  r[kCocycle].name = "cocycle";
  r[kConsistency].name = "multiplier_consistency";
  r[kCoordinates].name = "coordinate_compatibility";
  r[kIntertwiner].name = "intertwiner";
  r[kIsotropy].name = "isotropy";
  for (std::size_t s = 0; s <= kPhiHom; ++s) r[s].exact = true;
  for (auto& s : r) s.threshold = s.exact ? 0.0 : tol;
  r[kIsotropy].threshold = std::min(tol, 1e-10);

  auto record = [&](Suite s, double residual) {
    ++r[s].samples;
    r[s].max_residual = std::max(r[s].max_residual, residual);
    if (!(residual <= r[s].threshold)) ++r[s].failures;
  };
  auto record_exact = [&](Suite s, bool ok) {
    ++r[s].samples;
    if (!ok) ++r[s].failures;
  };

  for (std::size_t k = 0; k < samples; ++k) {
    const GroupParams gp = random_group_params(rng);
    const GroupParams hp = random_group_params(rng);
    const GroupElement g = GroupElement::from_params(gp);
    const GroupElement h = GroupElement::from_params(hp);
    const GroupElement gh = g * h;
    const SiegelPoint z = random_siegel_point(rng);
    const MultiplierParams mp = random_multiplier(rng);
    const BivariatePolynomial f = random_polynomial(rng);

    record_exact(kSymplectic, symplectic_check(g) && symplectic_check(gh));
    record_exact(kAdFormulas, ad_formula_mismatches(L, gp) == 0);
    const LinearMap adg = adjoint_map(g);
    record_exact(kAdjointHom, check_automorphism(L, adg) && adjoint_map(gh) == adg * adjoint_map(h));
    record_exact(kPhiHom, quotient_phi(gh) == quotient_phi(g) * quotient_phi(h));

    const SiegelPoint hz = act(h, z);
    const SiegelPoint ghz = act(gh, z);
    record(kActionHom, point_distance(act(g, hz), ghz));
    record(kCocycle, std::abs(multiplier_m(gh, z, mp) - multiplier_m(g, hz, mp) * multiplier_m(h, z, mp)));
    record(kConsistency, std::abs(multiplier_m(g, z, mp) - multiplier_tilde(quotient_phi(g), {z.z[0], z.z[1]}, mp)));
    const SiegelPoint gz = act(g, z);
    record(kCoordinates, std::max(std::abs(gz.z[0] - act_halfplane(gp.sl2_1, z.z[0])),
                                  std::abs(gz.z[1] - act_halfplane(gp.sl2_2, z.z[1]))));
    record(kIntertwiner, intertwiner_residual(f, g, z, mp));
  }

  const SiegelPoint base = base_point();
  for (int t = -2; t <= 2; ++t) {
    for (std::size_t w : {L.index_of("W1"), L.index_of("W2")}) {
      std::array<double, 12> coeffs{};
      coeffs[w] = static_cast<double>(t);
      record(kIsotropy, point_distance(act(exp_algebra(coeffs), base), base));
    }
  }

  for (auto& s : r) s.passed = s.failures == 0;
  return r;
}

}  // namespace vinberg
