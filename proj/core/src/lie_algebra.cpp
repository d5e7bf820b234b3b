#include "vinberg/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "vinberg/errors.hpp"

namespace vinberg {

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::span<const BasisBracket> brackets)
    : names_(std::move(names)) {
  const std::size_t n = dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (names_[a] == names_[b]) throw std::invalid_argument("duplicate basis name '" + names_[a] + "'");
    }
  }
  table_.assign(n * n, RVector(n));
  std::vector<bool> seen(n * n, false);
  for (const auto& br : brackets) {
    if (br.i >= n || br.j >= n) throw std::out_of_range("bracket index out of range");
    if (br.value.size() != n) throw AmbientMismatch("bracket value has wrong length");
    if (br.i == br.j) {
      if (!is_zero(br.value)) throw std::invalid_argument("[x, x] must vanish for '" + names_[br.i] + "'");
      continue;
    }
    const RVector mirror = Rational(-1) * br.value;
    if (seen[br.i * n + br.j] && table_[br.i * n + br.j] != br.value) {
      throw std::invalid_argument("conflicting entries for [" + names_[br.i] + ", " + names_[br.j] + "]");
    }
    table_[br.i * n + br.j] = br.value;
    table_[br.j * n + br.i] = mirror;
    seen[br.i * n + br.j] = seen[br.j * n + br.i] = true;
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return LieAlgebra(std::move(names), {});
}

std::optional<std::size_t> LieAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t LieAlgebra::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown basis element '" + std::string(name) + "'");
}

RVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw AmbientMismatch("element length does not match algebra dimension");
  RVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      axpy(x[i] * y[j], table_[i * n + j], out);
    }
  }
  return out;
}

LieAlgebra LieAlgebra::with_bracket(std::size_t i, std::size_t j, const RVector& value) const {
  const std::size_t n = dim();
  if (i >= n || j >= n || i == j) throw std::out_of_range("bad bracket index");
  if (value.size() != n) throw AmbientMismatch("bracket value has wrong length");
  LieAlgebra copy(*this);
  copy.table_[i * n + j] = value;
  copy.table_[j * n + i] = Rational(-1) * value;
  return copy;
}

std::vector<BasisBracket> LieAlgebra::nonzero_brackets() const {
  std::vector<BasisBracket> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (!is_zero(structure(i, j))) out.push_back({i, j, structure(i, j)});
    }
  }
  return out;
}

Element::Element(const LieAlgebra& algebra, RVector coeffs) : algebra_(&algebra), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra.dim()) throw AmbientMismatch("coefficient vector does not match algebra dimension");
}

Element Element::zero(const LieAlgebra& algebra) { return Element(algebra, zero_vector(algebra.dim())); }

Element Element::basis(const LieAlgebra& algebra, std::size_t i) {
  return Element(algebra, unit_vector(algebra.dim(), i));
}

Element Element::basis(const LieAlgebra& algebra, std::string_view name) {
  return basis(algebra, algebra.index_of(name));
}

Element& Element::operator+=(const Element& other) {
  if (algebra_ != other.algebra_) throw AlgebraMismatch("adding elements of different algebras");
  coeffs_ = coeffs_ + other.coeffs_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (algebra_ != other.algebra_) throw AlgebraMismatch("subtracting elements of different algebras");
  coeffs_ = coeffs_ - other.coeffs_;
  return *this;
}

Element operator*(const Rational& s, Element x) {
  x.coeffs_ = s * x.coeffs_;
  return x;
}

bool operator==(const Element& a, const Element& b) { return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_; }

std::string format_element(const LieAlgebra& algebra, std::span<const Rational> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag << '*';
    os << algebra.name(i);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string format_element(const Element& x) { return format_element(x.algebra(), x.coeffs()); }

Element bracket(const Element& x, const Element& y) {
  if (&x.algebra() != &y.algebra()) throw AlgebraMismatch("bracket of elements from different algebras");
  return Element(x.algebra(), x.algebra().bracket(x.coeffs(), y.coeffs()));
}

std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const RVector ei = unit_vector(n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const RVector ej = unit_vector(n, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const RVector ek = unit_vector(n, k);
        RVector defect = algebra.bracket(algebra.structure(i, j), ek);
        defect = defect + algebra.bracket(algebra.structure(j, k), ei);
        defect = defect + algebra.bracket(algebra.structure(k, i), ej);
        if (!is_zero(defect)) out.push_back({i, j, k, std::move(defect)});
      }
    }
  }
  return out;
}

}  // namespace vinberg
