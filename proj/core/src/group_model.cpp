#include "vinberg/group_model.hpp"

#include <utility>

#include "json.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/tube_algebra.hpp"

namespace vinberg {

namespace {

Rational det(const SL2& s) { return s.a * s.d - s.b * s.c; }

RMatrix build_matrix(const GroupParams& p) {
  const SL2& s1 = p.sl2_1;
  const SL2& s2 = p.sl2_2;
  const Rational lambda1 = p.a3 * (s1.a * p.lambda1p + s1.c * p.mu1p);
  const Rational mu1 = p.a3 * (s1.b * p.lambda1p + s1.d * p.mu1p);
  const Rational lambda2 = p.a3 * (s2.a * p.lambda2p + s2.c * p.mu2p);
  const Rational mu2 = p.a3 * (s2.b * p.lambda2p + s2.d * p.mu2p);
  const Rational zero;
  return RMatrix{{s1.a, zero, zero, s1.b, zero, p.mu1p},
                 {zero, s2.a, zero, zero, s2.b, p.mu2p},
                 {lambda1, lambda2, p.a3, mu1, mu2, p.kappa},
                 {s1.c, zero, zero, s1.d, zero, -p.lambda1p},
                 {zero, s2.c, zero, zero, s2.d, -p.lambda2p},
                 {zero, zero, zero, zero, zero, Rational(1) / p.a3}};
}

void validate(const GroupParams& p) {
  if (det(p.sl2_1) != Rational(1) || det(p.sl2_2) != Rational(1)) {
    throw BadDeterminant("SL2 block must have determinant 1");
  }
  if (p.a3.sign() <= 0) throw NonPositiveA3("a3 must be positive");
}

GroupParams read_params(const RMatrix& m) {
  GroupParams p;
  p.sl2_1 = {m(0, 0), m(0, 3), m(3, 0), m(3, 3)};
  p.sl2_2 = {m(1, 1), m(1, 4), m(4, 1), m(4, 4)};
  p.a3 = m(2, 2);
  p.mu1p = m(0, 5);
  p.mu2p = m(1, 5);
  p.lambda1p = -m(3, 5);
  p.lambda2p = -m(4, 5);
  p.kappa = m(2, 5);
  return p;
}

RMatrix generator(std::size_t index) {
  RVector c = unit_vector(12, index);
  const Rational& e1 = c[0];
  const Rational& e2 = c[1];
  const Rational& e3 = c[2];
  const Rational& e31 = c[3];
  const Rational& e32 = c[4];
  const Rational& a1 = c[5];
  const Rational& a2 = c[6];
  const Rational& a3 = c[7];
  const Rational& a31 = c[8];
  const Rational& a32 = c[9];
  const Rational& k1 = c[10];
  const Rational& k2 = c[11];
  const Rational half(1, 2);
  const Rational zero;
  return RMatrix{{half * a1, zero, zero, e1 - k1, zero, e31},
                 {zero, half * a2, zero, zero, e2 - k2, e32},
                 {a31, a32, half * a3, e31, e32, e3},
                 {k1, zero, zero, -(half * a1), zero, -a31},
                 {zero, k2, zero, zero, -(half * a2), -a32},
                 {zero, zero, zero, zero, zero, -(half * a3)}};
}

}  // namespace

SL2 operator*(const SL2& x, const SL2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

SL2 inverse(const SL2& x) {
  if (det(x) != Rational(1)) throw BadDeterminant("SL2 block must have determinant 1");
  return {x.d, -x.b, -x.c, x.a};
}

GroupElement::GroupElement() : matrix_(RMatrix::identity(6)) {}

GroupElement GroupElement::from_params(const GroupParams& p) {
  validate(p);
  return GroupElement(build_matrix(p), p);
}

GroupElement GroupElement::from_matrix(const RMatrix& m) {
  if (!is_member(m)) throw NotAMember("matrix is not in the linear group");
  return GroupElement(m, read_params(m));
}

GroupElement GroupElement::inverse() const { return from_matrix(matrix_.inverse()); }

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return GroupElement::from_matrix(g.matrix_ * h.matrix_);
}

bool is_member(const RMatrix& m) {
  if (m.rows() != 6 || m.cols() != 6) return false;
  const GroupParams p = read_params(m);
  if (p.a3.sign() <= 0 || det(p.sl2_1) != Rational(1) || det(p.sl2_2) != Rational(1)) return false;
  return build_matrix(p) == m;
}

const std::array<RMatrix, 12>& basis_matrices() {
  static const std::array<RMatrix, 12> matrices = [] {
    std::array<RMatrix, 12> out;
    for (std::size_t i = 0; i < 12; ++i) out[i] = generator(i);
    return out;
  }();
  return matrices;
}

RMatrix algebra_matrix(std::span<const Rational> coeffs) {
  if (coeffs.size() != 12) throw AmbientMismatch("expected 12 coefficients");
  RMatrix out(6, 6);
  const auto& basis = basis_matrices();
  for (std::size_t i = 0; i < 12; ++i) {
    if (!coeffs[i].is_zero()) out += coeffs[i] * basis[i];
  }
  return out;
}

RVector expand_in_basis(const RMatrix& m) {
  if (m.rows() != 6 || m.cols() != 6) throw ExpansionFailed("expected a 6x6 matrix");
  const Rational k1 = m(3, 0);
  const Rational k2 = m(4, 1);
  RVector c = {m(0, 3) + k1, m(1, 4) + k2, m(2, 5), m(0, 5), m(1, 5),  2 * m(0, 0),
               2 * m(1, 1),  2 * m(2, 2),  m(2, 0), m(2, 1), k1,       k2};
  if (algebra_matrix(c) != m) throw ExpansionFailed("matrix is outside the span of the generators");
  return c;
}

std::vector<ModelMismatch> verify_model(const LieAlgebra& algebra) {
  if (!has_tube_basis(algebra)) throw AlgebraMismatch("model check needs the tube basis E1..W2");
  const auto& x = basis_matrices();
  std::vector<ModelMismatch> out;
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = i + 1; j < 12; ++j) {
      RVector actual = expand_in_basis(x[i] * x[j] - x[j] * x[i]);
      if (actual != algebra.structure(i, j)) out.push_back({i, j, algebra.structure(i, j), std::move(actual)});
    }
  }
  return out;
}

Element adjoint(const GroupElement& g, const Element& x) {
  if (!has_tube_basis(x.algebra())) throw AlgebraMismatch("adjoint action needs the tube basis E1..W2");
  const RMatrix inv = g.matrix().inverse();
  return Element(x.algebra(), expand_in_basis(g.matrix() * algebra_matrix(x.coeffs()) * inv));
}

LinearMap adjoint_map(const GroupElement& g) {
  const RMatrix inv = g.matrix().inverse();
  const auto& x = basis_matrices();
  std::vector<RVector> columns;
  columns.reserve(12);
  for (const RMatrix& xi : x) columns.push_back(expand_in_basis(g.matrix() * xi * inv));
  return {RMatrix::from_columns(columns, 12)};
}

QuotientImage quotient_phi(const GroupElement& g) {
  const GroupParams& p = g.params();
  return {p.a3, p.sl2_1, p.sl2_2};
}

QuotientImage operator*(const QuotientImage& s, const QuotientImage& t) {
  return {s.gamma * t.gamma, s.g1 * t.g1, s.g2 * t.g2};
}

QuotientImage inverse(const QuotientImage& t) {
  return {Rational(1) / t.gamma, inverse(t.g1), inverse(t.g2)};
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 8);
  return Rational(num(rng), den(rng));
}

Rational bounded_rational(std::mt19937_64& rng) {
  const Rational two(2);
  for (;;) {
    Rational r = small_rational(rng);
    if (r <= two && r >= -two) return r;
  }
}

SL2 random_sl2(std::mt19937_64& rng) {
  const Rational two(2);
  const Rational half(1, 2);
  for (;;) {
    SL2 s;
    s.a = small_rational(rng);
    s.b = small_rational(rng);
    s.c = small_rational(rng);
    if (s.a < half && s.a > -half) continue;
    s.d = (Rational(1) + s.b * s.c) / s.a;
    bool bounded = true;
    for (const Rational* v : {&s.a, &s.b, &s.c, &s.d}) bounded = bounded && *v <= two && *v >= -two;
    if (bounded) return s;
  }
}

}  // namespace

GroupParams random_group_params(std::mt19937_64& rng) {
  GroupParams p;
  p.sl2_1 = random_sl2(rng);
  p.sl2_2 = random_sl2(rng);
  p.a3 = Rational(std::uniform_int_distribution<long>(1, 8)(rng), 2);
  p.lambda1p = bounded_rational(rng);
  p.mu1p = bounded_rational(rng);
  p.lambda2p = bounded_rational(rng);
  p.mu2p = bounded_rational(rng);
  p.kappa = bounded_rational(rng);
  return p;
}

namespace {

using ordered_json = nlohmann::ordered_json;

template <class F>
void for_each_field(GroupParams& p, F&& f) {
  f("a1", p.sl2_1.a);
  f("b1", p.sl2_1.b);
  f("c1", p.sl2_1.c);
  f("d1", p.sl2_1.d);
  f("a2", p.sl2_2.a);
  f("b2", p.sl2_2.b);
  f("c2", p.sl2_2.c);
  f("d2", p.sl2_2.d);
  f("a3", p.a3);
  f("lambda1p", p.lambda1p);
  f("mu1p", p.mu1p);
  f("lambda2p", p.lambda2p);
  f("mu2p", p.mu2p);
  f("kappa", p.kappa);
}

}  // namespace

std::string group_params_to_json(const GroupParams& p) {
  ordered_json j = ordered_json::object();
  GroupParams copy = p;
  for_each_field(copy, [&](const char* key, const Rational& v) { j[key] = v.str(); });
  return j.dump(2);
}

GroupParams parse_group_params(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group element: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("group element: expected a JSON object");
  GroupParams p;
  std::size_t known = 0;
  for_each_field(p, [&](const char* key, Rational& v) {
    if (!j.contains(key)) return;
    ++known;
    const auto& value = j.at(key);
    if (value.is_string()) {
      v = Rational::parse(value.get<std::string>());
    } else if (value.is_number_integer()) {
      v = Rational(value.get<long>());
    } else {
      throw ParseError(std::string("group element: field '") + key + "' must be a rational string");
    }
  });
  if (known != j.size()) throw ParseError("group element: unknown field");
  return p;
}

}  // namespace vinberg
