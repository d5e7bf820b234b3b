#include "vinberg/module_check.hpp"

#include <algorithm>
#include <stdexcept>

#include "vinberg/errors.hpp"

namespace vinberg {

std::vector<RMatrix> quotient_action(const LieAlgebra& algebra, const Subspace& lower, const Subspace& upper) {
  if (!upper.contains(lower)) throw std::invalid_argument("quotient_action: lower is not contained in upper");
  const std::size_t n = algebra.dim();
  std::vector<RVector> reduced;
  for (std::size_t r = 0; r < upper.dim(); ++r) {
    RVector v = lower.reduce(upper.basis().row_span(r));
    if (!is_zero(v)) reduced.push_back(std::move(v));
  }
  const Subspace complement = Subspace::span(n, reduced);
  const std::size_t d = complement.dim();

  std::vector<RMatrix> action;
  action.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RVector x = unit_vector(n, i);
    RMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      RVector image = lower.reduce(algebra.bracket(x, complement.basis().row_span(j)));
      if (!complement.contains(image)) throw NotInvariant("upper/lower is not a g-module");
      RVector coords = complement.coordinates(image);
      for (std::size_t r = 0; r < d; ++r) m(r, j) = coords[r];
    }
    action.push_back(std::move(m));
  }
  return action;
}

RVector characteristic_polynomial(const RMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  const std::size_t n = m.rows();
  RVector c(n + 1);
  c[n] = 1;
  RMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class value) {
  if (value < 0) value = -value;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      small.push_back(d);
      if (d * d != value) large.push_back(value / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const RVector& poly, const Rational& t) {
  Rational acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const RVector& poly) {
  RVector p = poly;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.size() <= 1) {
    if (p.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
    return {};
  }
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (p[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (p.size() > 1) {
    mpz_class common = 1;
    for (const auto& c : p) {
      mpz_class den = c.denominator();
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
    }
    const mpz_class lead = (p.back() * Rational(mpq_class(common))).numerator();
    const mpz_class tail = (p.front() * Rational(mpq_class(common))).numerator();
    for (const auto& num : positive_divisors(tail)) {
      for (const auto& den : positive_divisors(lead)) {
        for (int s : {1, -1}) {
          Rational cand(mpq_class(mpz_class(num * s), den));
          if (evaluate(p, cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool has_common_eigenvector(const std::vector<RMatrix>& action) {
  if (action.empty()) return true;
  const std::size_t d = action.front().rows();
  if (d == 0) return false;
  // Each surviving candidate is an intersection of eigenspaces, one per matrix processed so far.
  std::vector<Subspace> candidates{Subspace::full(d)};
  for (const auto& m : action) {
    std::vector<Subspace> next;
    for (const auto& lambda : rational_roots(characteristic_polynomial(m))) {
      RMatrix shifted = m;
      for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lambda;
      const Subspace eigenspace = kernel(shifted);
      for (const auto& c : candidates) {
        Subspace s = subspace_intersect(c, eigenspace);
        if (!s.is_zero() && std::find(next.begin(), next.end(), s) == next.end()) next.push_back(std::move(s));
      }
    }
    if (next.empty()) return false;
    candidates = std::move(next);
  }
  return true;
}

std::optional<bool> is_irreducible(const std::vector<RMatrix>& action) {
  if (action.empty()) throw std::invalid_argument("is_irreducible needs at least one action matrix");
  const std::size_t d = action.front().rows();
  if (d <= 1) return d == 1;
  if (d > 3) return std::nullopt;
  // d <= 3: a proper submodule has dimension 1 (a common eigenvector) or
  // d - 1 (a common eigenvector of the dual action).
  if (has_common_eigenvector(action)) return false;
  std::vector<RMatrix> dual;
  dual.reserve(action.size());
  for (const auto& m : action) dual.push_back(m.transpose());
  return !has_common_eigenvector(dual);
}

std::vector<RMatrix> intertwiners(const std::vector<RMatrix>& rho1, const std::vector<RMatrix>& rho2) {
  if (rho1.size() != rho2.size()) throw std::invalid_argument("actions of different algebras");
  const std::size_t d1 = rho1.empty() ? 0 : rho1.front().rows();
  const std::size_t d2 = rho2.empty() ? 0 : rho2.front().rows();
  // Unknown T is d2 x d1, flattened row-major: T(r, c) -> r * d1 + c.
  const std::size_t unknowns = d1 * d2;
  std::vector<RVector> equations;
  for (std::size_t x = 0; x < rho1.size(); ++x) {
    for (std::size_t r = 0; r < d2; ++r) {
      for (std::size_t c = 0; c < d1; ++c) {
        // (T rho1 - rho2 T)(r, c)
        RVector eq(unknowns);
        for (std::size_t k = 0; k < d1; ++k) eq[r * d1 + k] += rho1[x](k, c);
        for (std::size_t k = 0; k < d2; ++k) eq[k * d1 + c] -= rho2[x](r, k);
        if (!is_zero(eq)) equations.push_back(std::move(eq));
      }
    }
  }
  const Subspace solutions =
      equations.empty() ? Subspace::full(unknowns) : kernel(RMatrix::from_rows(equations, unknowns));
  std::vector<RMatrix> out;
  for (std::size_t b = 0; b < solutions.dim(); ++b) {
    RMatrix t(d2, d1);
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d1; ++c) t(r, c) = solutions.basis()(b, r * d1 + c);
    out.push_back(std::move(t));
  }
  return out;
}

bool contains_invertible(const std::vector<RMatrix>& space) {
  if (space.empty()) return false;
  if (!space.front().is_square()) return false;
  const std::size_t d = space.front().rows();
  const std::size_t k = space.size();
  std::vector<long> point(k, 0);
  while (true) {
    RMatrix t(d, d);
    for (std::size_t i = 0; i < k; ++i) {
      if (point[i] != 0) t += Rational(point[i]) * space[i];
    }
    if (!t.determinant().is_zero()) return true;
    std::size_t pos = 0;
    while (pos < k && point[pos] == static_cast<long>(d)) point[pos++] = 0;
    if (pos == k) return false;
    ++point[pos];
  }
}

}  // namespace vinberg
