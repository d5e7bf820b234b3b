#include <stdexcept>

#include "vinberg/errors.hpp"
#include "vinberg/lie_algebra.hpp"

namespace vinberg {

namespace {

void require_ambient(const LieAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) throw AmbientMismatch("subspace ambient does not match algebra dimension");
}

bool is_solvable_subspace(const LieAlgebra& algebra, const Subspace& s) {
  Subspace current = s;
  while (!current.is_zero()) {
    Subspace next = bracket_subspaces(algebra, current, current);
    if (next == current) return false;
    current = std::move(next);
  }
  return true;
}

}  // namespace

RMatrix ad_matrix(const LieAlgebra& algebra, std::span<const Rational> x) {
  const std::size_t n = algebra.dim();
  RMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RVector col = algebra.bracket(x, unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

LinearMap ad_matrix(const Element& x) { return {ad_matrix(x.algebra(), x.coeffs())}; }

RMatrix ad_restricted(const Element& x, const Subspace& invariant) {
  const LieAlgebra& algebra = x.algebra();
  require_ambient(algebra, invariant);
  const std::size_t d = invariant.dim();
  RMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    RVector image = algebra.bracket(x.coeffs(), invariant.basis().row_span(j));
    if (!invariant.contains(image)) {
      throw NotInvariant("ad(" + format_element(x) + ") moves basis vector " + std::to_string(j) +
                         " out of the subspace");
    }
    RVector coords = invariant.coordinates(image);
    for (std::size_t r = 0; r < d; ++r) m(r, j) = coords[r];
  }
  return m;
}

Subspace bracket_subspaces(const LieAlgebra& algebra, const Subspace& u, const Subspace& v) {
  require_ambient(algebra, u);
  require_ambient(algebra, v);
  std::vector<RVector> products;
  for (std::size_t a = 0; a < u.dim(); ++a) {
    for (std::size_t b = 0; b < v.dim(); ++b) {
      RVector p = algebra.bracket(u.basis().row_span(a), v.basis().row_span(b));
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  }
  return Subspace::span(algebra.dim(), products);
}

Subspace ideal_closure(const LieAlgebra& algebra, const Subspace& generators) {
  require_ambient(algebra, generators);
  const Subspace whole = Subspace::full(algebra.dim());
  Subspace current = generators;
  while (true) {
    Subspace next = subspace_sum(current, bracket_subspaces(algebra, whole, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
  require_ambient(algebra, s);
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const RVector ei = unit_vector(n, i);
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (!s.contains(algebra.bracket(ei, s.basis().row_span(b)))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& algebra, const Subspace& s) {
  require_ambient(algebra, s);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      if (!s.contains(algebra.bracket(s.basis().row_span(a), s.basis().row_span(b)))) return false;
    }
  }
  return true;
}

Subspace center(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  RMatrix stacked(0, n);
  for (std::size_t i = 0; i < n; ++i) stacked = stacked.vstack(ad_matrix(algebra, unit_vector(n, i)));
  return kernel(stacked);
}

std::vector<Subspace> derived_series(const LieAlgebra& algebra) {
  std::vector<Subspace> series{Subspace::full(algebra.dim())};
  while (true) {
    Subspace next = bracket_subspaces(algebra, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subspace> lower_central_series(const LieAlgebra& algebra) {
  const Subspace whole = Subspace::full(algebra.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_subspaces(algebra, whole, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

bool is_solvable(const LieAlgebra& algebra) { return derived_series(algebra).back().is_zero(); }

LieAlgebra subalgebra(const LieAlgebra& algebra, const Subspace& s) {
  require_ambient(algebra, s);
  if (!is_subalgebra(algebra, s)) throw NotSubalgebra("subspace is not closed under the bracket");
  const std::size_t d = s.dim();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < d; ++a) {
    const auto row = s.basis().row_span(a);
    std::size_t nonzero = 0;
    for (const auto& x : row) nonzero += x.is_zero() ? 0 : 1;
    if (nonzero == 1) {
      names.push_back(algebra.name(s.pivots()[a]));
    } else {
      names.push_back("v" + std::to_string(a + 1));
    }
  }
  std::vector<BasisBracket> brackets;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      RVector p = algebra.bracket(s.basis().row_span(a), s.basis().row_span(b));
      if (!is_zero(p)) brackets.push_back({a, b, s.coordinates(p)});
    }
  }
  return LieAlgebra(std::move(names), brackets);
}

RMatrix killing_matrix(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<RMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(algebra, unit_vector(n, i)));
  RMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) t += ads[i](a, b) * ads[j](b, a);
        }
      k(i, j) = t;
      k(j, i) = t;
    }
  }
  return k;
}

RMatrix killing_restricted(const LieAlgebra& algebra, const Subspace& s) {
  return killing_matrix(subalgebra(algebra, s));
}

Subspace radical(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const Subspace whole = Subspace::full(n);
  const Subspace derived = bracket_subspaces(algebra, whole, whole);
  Subspace candidate = derived.is_zero() ? whole : kernel(derived.basis() * killing_matrix(algebra));
  if (!is_ideal(algebra, candidate)) throw VerificationFailed("Killing-orthogonal of [g,g] is not an ideal");
  if (!is_solvable_subspace(algebra, candidate)) {
    throw VerificationFailed("Killing-orthogonal of [g,g] is not solvable");
  }
  return candidate;
}

bool check_automorphism(const LieAlgebra& algebra, const LinearMap& t) {
  const std::size_t n = algebra.dim();
  if (t.matrix.rows() != n || t.matrix.cols() != n) throw AmbientMismatch("map does not act on the algebra");
  if (t.matrix.determinant().is_zero()) throw NotInvertible("linear map is singular");
  std::vector<RVector> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(t.matrix.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.apply(algebra.structure(i, j)) != algebra.bracket(images[i], images[j])) return false;
    }
  }
  return true;
}

Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal) {
  require_ambient(algebra, ideal);
  if (!is_ideal(algebra, ideal)) throw NotAnIdeal("quotient by a subspace that is not an ideal");
  const std::size_t n = algebra.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  Quotient out;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) out.complement.push_back(c);
  }
  const std::size_t q = out.complement.size();

  auto project = [&](std::span<const Rational> v) {
    RVector reduced = ideal.reduce(v);
    RVector image(q);
    for (std::size_t t = 0; t < q; ++t) image[t] = reduced[out.complement[t]];
    return image;
  };

  out.projection = RMatrix(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    RVector col = project(unit_vector(n, j));
    for (std::size_t t = 0; t < q; ++t) out.projection(t, j) = col[t];
  }

  std::vector<std::string> names;
  for (auto c : out.complement) names.push_back(algebra.name(c));
  std::vector<BasisBracket> brackets;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      RVector p = project(algebra.structure(out.complement[a], out.complement[b]));
      if (!is_zero(p)) brackets.push_back({a, b, std::move(p)});
    }
  }
  out.algebra = LieAlgebra(std::move(names), brackets);
  if (!jacobi_violations(out.algebra).empty()) throw VerificationFailed("quotient algebra violates Jacobi");
  return out;
}

}  // namespace vinberg
