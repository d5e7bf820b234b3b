#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "vinberg/algebra_io.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/lie_algebra.hpp"
#include "vinberg/tube_algebra.hpp"

using namespace vinberg;

namespace {

const LieAlgebra& G() { return tube_algebra(); }

Element el(std::string_view name) { return Element::basis(G(), name); }

Subspace named(const std::string& key) { return tube_subspaces(G()).at(key); }

Subspace sum_of(std::initializer_list<const char*> keys) {
  Subspace s(G().dim());
  for (const char* k : keys) s = subspace_sum(s, named(k));
  return s;
}

Subspace span_names(std::initializer_list<const char*> names) {
  std::vector<RVector> rows;
  for (const char* n : names) rows.push_back(unit_vector(12, G().index_of(n)));
  return Subspace::span(12, rows);
}

RVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  RVector v(n);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST(TubeAlgebra, BasisAndTableMatchTypedInRelations) {
  ASSERT_EQ(G().dim(), 12u);
  EXPECT_TRUE(has_tube_basis(G()));
  const oracle::Table t;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(G().structure(i, j)[k].value(), t.c[i][j][k]);
  EXPECT_EQ(G().nonzero_brackets().size(), 23u);
}

TEST(TubeAlgebra, SampleBrackets) {
  EXPECT_EQ(bracket(el("E1"), el("A1")), Rational(-1) * el("E1"));
  EXPECT_EQ(bracket(el("A1"), el("W1")), Rational(-1) * el("W1") - Rational(2) * el("E1"));
  EXPECT_TRUE(bracket(el("E1"), el("E2")).is_zero());
  EXPECT_EQ(bracket(el("E31"), el("A31")), Rational(-2) * el("E3"));
  EXPECT_EQ(bracket(el("E1") + el("E2"), el("W1")), Rational(2) * el("A1"));
  const Element x = el("A1") + Rational(3, 2) * el("W2") - el("E31");
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_EQ(format_element(bracket(el("A1"), el("W1"))), "-2*E1 - W1");
}

TEST(TubeAlgebra, RejectsMixedAlgebras) {
  const LieAlgebra ab = LieAlgebra::abelian(12);
  EXPECT_THROW(bracket(el("E1"), Element::basis(ab, 0)), AlgebraMismatch);
}

TEST(Jacobi, TubeAlgebraAndPerturbation) {
  EXPECT_TRUE(jacobi_violations(G()).empty());
  EXPECT_TRUE(jacobi_violations(LieAlgebra::abelian(5)).empty());
  const std::size_t e1 = G().index_of("E1"), a1 = G().index_of("A1");
  const LieAlgebra flipped = G().with_bracket(e1, a1, unit_vector(12, e1));
  EXPECT_FALSE(jacobi_violations(flipped).empty());
}

TEST(AdMatrix, RepresentationPropertyOnBasisPairs) {
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      const Element x = Element::basis(G(), i), y = Element::basis(G(), j);
      const RMatrix lhs = ad_matrix(bracket(x, y)).matrix;
      const RMatrix ax = ad_matrix(x).matrix, ay = ad_matrix(y).matrix;
      EXPECT_EQ(lhs, ax * ay - ay * ax);
    }
}

TEST(AdMatrix, ConventionAndRank) {
  const RMatrix a3 = ad_matrix(el("A3")).matrix;
  EXPECT_EQ(a3.apply(unit_vector(12, G().index_of("E3"))), unit_vector(12, G().index_of("E3")));
  EXPECT_EQ(rref(ad_matrix(el("E3")).matrix).rank, 1u);
  EXPECT_TRUE(ad_matrix(Element::zero(G())).matrix.is_zero());
  // Independent: the oracle table's ad(E3) has rank 1 too.
  EXPECT_EQ(oracle::rank(oracle::Table{}.ad(2)), 1u);
}

TEST(AdRestricted, RejectsNonInvariantSubspace) {
  EXPECT_THROW(ad_restricted(el("E31"), named("s3")), NotInvariant);
  EXPECT_TRUE(ad_restricted(Element::zero(G()), sum_of({"h5", "a1"})).is_zero());
}

TEST(AdRestricted, SingleGeneratorOnH5PlusA1) {
  const RMatrix m = ad_restricted(el("E3"), sum_of({"h5", "a1"}));
  RMatrix expected(6, 6);
  expected(0, 3) = -1;
  EXPECT_EQ(m, expected);
}

TEST(TubeSubspaces, DimensionsAndRelations) {
  EXPECT_EQ(named("h5").dim(), 5u);
  EXPECT_EQ(named("s3").dim(), 3u);
  EXPECT_EQ(named("b").dim(), 10u);
  EXPECT_EQ(named("<W1,W2>").dim(), 2u);
  EXPECT_TRUE(named("h5").contains(named("h3")));
  EXPECT_TRUE(subspace_intersect(named("s3"), named("s3'")).is_zero());
  EXPECT_EQ(subspace_intersect(sum_of({"h5", "s3"}), sum_of({"h5", "s3'"})), named("h5"));
}

TEST(IdealClosure, KnownClosures) {
  EXPECT_EQ(ideal_closure(G(), span_names({"E3"})), span_names({"E3"}));
  const Subspace e1 = ideal_closure(G(), span_names({"E1"}));
  EXPECT_EQ(e1.dim(), 6u);
  EXPECT_EQ(e1, sum_of({"h3", "s3"}));
  const Subspace a3 = ideal_closure(G(), span_names({"A3"}));
  EXPECT_EQ(a3, sum_of({"h5", "a1"}));
}

TEST(IdealClosure, MonotoneIdempotentAndIdeal) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Subspace s = Subspace::span(12, std::vector<RVector>{random_vector(rng, 12)});
    const Subspace c = ideal_closure(G(), s);
    EXPECT_TRUE(is_ideal(G(), c));
    EXPECT_TRUE(c.contains(s));
    EXPECT_EQ(ideal_closure(G(), c), c);
  }
}

TEST(IdealPredicates, Examples) {
  EXPECT_TRUE(is_ideal(G(), named("h5")));
  EXPECT_FALSE(is_ideal(G(), named("s3")));
  EXPECT_TRUE(is_subalgebra(G(), named("s3")));
  EXPECT_TRUE(is_ideal(G(), Subspace(12)));
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(G()).is_zero());
  // Independent: the stacked ad(e_i) have full column rank.
  const oracle::Table t;
  oracle::Mat stacked;
  for (std::size_t i = 0; i < 12; ++i) {
    const auto a = t.ad(i);  // x is central iff ad(e_i) x = 0 for every i
    for (const auto& row : a) stacked.push_back(row);
  }
  EXPECT_EQ(oracle::rank(stacked), 12u);

  const LieAlgebra h3 = subalgebra(G(), named("h3"));
  EXPECT_EQ(center(h3).dim(), 1u);
  EXPECT_TRUE(center(LieAlgebra::abelian(2)).is_full());
}

TEST(Series, DerivedAndLowerCentral) {
  const auto d = derived_series(G());
  ASSERT_GE(d.size(), 2u);
  EXPECT_EQ(d[1], sum_of({"h5", "s3", "s3'"}));
  EXPECT_EQ(d[1].dim(), 11u);
  EXPECT_FALSE(d[1].contains(unit_vector(12, G().index_of("A3"))));
  // Independent: the span of every table right-hand side.
  const oracle::Table t;
  oracle::Mat rhs;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) rhs.push_back(t.c[i][j]);
  EXPECT_EQ(oracle::rank(rhs), 11u);

  const LieAlgebra h5 = subalgebra(G(), named("h5"));
  const auto dh = derived_series(h5);
  ASSERT_EQ(dh.size(), 3u);
  EXPECT_EQ(dh[1].dim(), 1u);
  EXPECT_TRUE(dh[2].is_zero());
  EXPECT_TRUE(is_solvable(h5));

  const auto da = derived_series(LieAlgebra::abelian(3));
  ASSERT_EQ(da.size(), 2u);
  EXPECT_TRUE(da[1].is_zero());
  EXPECT_FALSE(is_solvable(G()));
  EXPECT_TRUE(lower_central_series(h5).back().is_zero());
}

TEST(Killing, SymmetricInvariantAndSingular) {
  const RMatrix k = killing_matrix(G());
  EXPECT_EQ(k, k.transpose());
  EXPECT_TRUE(k.determinant().is_zero());
  EXPECT_EQ(rref(k).rank, 7u);
  // Independent: trace(ad e_i ad e_j) from the typed-in table.
  const oracle::Table t;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      const auto p = oracle::mul(t.ad(i), t.ad(j));
      mpq_class tr = 0;
      for (std::size_t a = 0; a < 12; ++a) tr += p[a][a];
      EXPECT_EQ(k(i, j).value(), tr);
    }
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    const RVector x = random_vector(rng, 12), y = random_vector(rng, 12), z = random_vector(rng, 12);
    const RVector xy = G().bracket(x, y), yz = G().bracket(y, z);
    EXPECT_EQ(dot(xy, k.apply(z)), dot(x, k.apply(yz)));
  }
  EXPECT_TRUE(killing_matrix(LieAlgebra::abelian(3)).is_zero());
}

TEST(Killing, SemisimplePartIsNondegenerate) {
  const Subspace s = sum_of({"s3", "s3'"});
  EXPECT_FALSE(killing_restricted(G(), s).determinant().is_zero());
  EXPECT_THROW(killing_restricted(G(), span_names({"E1", "W1"})), NotSubalgebra);
}

TEST(Radical, TubeAbelianAndSemisimple) {
  const Subspace r = radical(G());
  EXPECT_EQ(r, sum_of({"h5", "a1"}));
  // Independent certificate: r is a solvable ideal and g/r has nondegenerate Killing form.
  EXPECT_TRUE(is_ideal(G(), r));
  EXPECT_TRUE(is_solvable(subalgebra(G(), r)));
  const Quotient q = quotient(G(), r);
  EXPECT_FALSE(killing_matrix(q.algebra).determinant().is_zero());

  EXPECT_TRUE(radical(LieAlgebra::abelian(3)).is_full());
  EXPECT_TRUE(radical(subalgebra(G(), sum_of({"s3", "s3'"}))).is_zero());
  EXPECT_TRUE(r.contains(center(G())));
}

TEST(Automorphisms, SwapAndSign) {
  const LinearMap psi = swap_automorphism(G());
  const LinearMap sigma = sign_automorphism(G());
  const LinearMap id{RMatrix::identity(12)};
  EXPECT_TRUE(check_automorphism(G(), psi));
  EXPECT_TRUE(check_automorphism(G(), sigma));
  EXPECT_TRUE(check_automorphism(G(), id));
  EXPECT_EQ(psi * psi, id);
  EXPECT_EQ(sigma * sigma, id);
  EXPECT_EQ(psi * sigma, sigma * psi);
  EXPECT_EQ(psi.apply(unit_vector(12, 0)), unit_vector(12, 1));
  EXPECT_EQ(psi.apply(unit_vector(12, 2)), unit_vector(12, 2));

  LinearMap neg_e1 = id;
  neg_e1.matrix(0, 0) = -1;
  EXPECT_FALSE(check_automorphism(G(), neg_e1));
  EXPECT_THROW(check_automorphism(G(), LinearMap{RMatrix(12, 12)}), NotInvertible);
}

TEST(Quotient, Examples) {
  const Quotient q = quotient(G(), sum_of({"h5", "a1"}));
  EXPECT_EQ(q.algebra.dim(), 6u);
  EXPECT_TRUE(radical(q.algebra).is_zero());
  EXPECT_EQ(q.projection.rows(), 6u);
  EXPECT_EQ(quotient(G(), span_names({"E3"})).algebra.dim(), 11u);
  EXPECT_EQ(quotient(G(), Subspace::full(12)).algebra.dim(), 0u);
  EXPECT_THROW(quotient(G(), named("s3")), NotAnIdeal);
}

TEST(AlgebraIo, RoundTripAndErrors) {
  const LieAlgebra back = parse_algebra(algebra_to_json(G()));
  EXPECT_EQ(back, G());
  EXPECT_THROW(parse_algebra("{"), ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 2, "names": ["x"], "brackets": []})"), ParseError);
  EXPECT_THROW(parse_algebra(R"({"dim": 1, "names": ["x"], "brackets": [["x","y",{}]]})"), ParseError);
  EXPECT_THROW(load_algebra("/nonexistent/algebra.json"), ParseError);
  const LieAlgebra h = parse_algebra(R"({"dim": 3, "names": ["x","y","z"], "brackets": [["x","y",{"z":"1"}]]})");
  EXPECT_EQ(h.structure(1, 0), (RVector{0, 0, -1}));
}
