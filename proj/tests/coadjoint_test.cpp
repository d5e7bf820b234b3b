#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vinberg/coadjoint.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/tube_algebra.hpp"

using namespace vinberg;

namespace {

const LieAlgebra& G() { return tube_algebra(); }

XiParams xi(Rational xi3, Rational eta3, long n, long nprime) { return {xi3, eta3, n, nprime}; }

/// The skew form typed in as a closed-form matrix in (xi3, n, n').
RMatrix displayed_skew(const Rational& xi3, long n, long nprime) {
  RMatrix m(12, 12);
  auto put = [&](std::size_t i, std::size_t j, const Rational& v) {
    m(i, j) = v;
    m(j, i) = -v;
  };
  put(0, 5, Rational(n, 2));
  put(1, 6, Rational(nprime, 2));
  put(2, 7, -xi3);
  put(3, 8, Rational(-2) * xi3);
  put(4, 9, Rational(-2) * xi3);
  return m;
}

Subspace span_names(std::initializer_list<const char*> names) {
  std::vector<RVector> rows;
  for (const char* n : names) rows.push_back(unit_vector(12, G().index_of(n)));
  return Subspace::span(12, rows);
}

}  // namespace

TEST(LinearForm, Coefficients) {
  EXPECT_EQ(linear_form(G(), xi(-1, 0, 1, 1)),
            (RVector{Rational(-1, 2), Rational(-1, 2), -1, 0, 0, 0, 0, 0, 0, 0, 1, 1}));
  EXPECT_TRUE(is_zero(linear_form(G(), xi(0, 0, 0, 0))));
  EXPECT_EQ(linear_form(G(), xi(0, 2, 0, 3)),
            (RVector{0, Rational(-3, 2), 0, 0, 0, 0, 0, 2, 0, 0, 0, 3}));
}

TEST(SkewForm, MatchesClosedFormAndOracle) {
  const oracle::Table t;
  for (auto [x3, n, np] : std::vector<std::tuple<long, long, long>>{{-1, 1, 1}, {-2, 3, 5}, {0, 2, 0}, {4, -1, 7}}) {
    for (Rational eta : {Rational(0), Rational(5, 3)}) {
      const RVector form = linear_form(G(), xi(x3, eta, n, np));
      const RMatrix m = skew_form_matrix(G(), form);
      EXPECT_EQ(m, displayed_skew(x3, n, np));
      EXPECT_EQ(m.transpose(), Rational(-1) * m);
      std::vector<mpq_class> raw;
      for (const auto& q : form) raw.push_back(q.value());
      const auto o = t.skew(raw);
      for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(m(i, j).value(), o[i][j]);
    }
  }
  EXPECT_TRUE(skew_form_matrix(G(), zero_vector(12)).is_zero());
  const RMatrix m = skew_form_matrix(G(), linear_form(G(), xi(Rational(-7, 3), 0, 1, 1)));
  EXPECT_EQ(m(G().index_of("A3"), G().index_of("E3")), Rational(-7, 3));
  EXPECT_EQ(m(G().index_of("E31"), G().index_of("A31")), Rational(14, 3));
}

TEST(SkewForm, RankAgainstOracle) {
  const RMatrix m = skew_form_matrix(G(), linear_form(G(), xi(-1, 0, 1, 1)));
  EXPECT_EQ(rref(m).rank, 10u);
  const oracle::Table t;
  std::vector<mpq_class> raw;
  for (const auto& q : linear_form(G(), xi(-1, 0, 1, 1))) raw.push_back(q.value());
  EXPECT_EQ(oracle::rank(t.skew(raw)), 10u);
}

TEST(Isotropy, GenericAndDegenerate) {
  EXPECT_EQ(isotropy_algebra(G(), linear_form(G(), xi(-1, 0, 1, 1))), span_names({"W1", "W2"}));
  const Subspace k = isotropy_algebra(G(), linear_form(G(), xi(0, 0, 1, 1)));
  EXPECT_EQ(k.dim(), 8u);
  EXPECT_EQ(k, span_names({"E3", "E31", "E32", "A3", "A31", "A32", "W1", "W2"}));
  EXPECT_TRUE(isotropy_algebra(G(), linear_form(G(), xi(0, 3, 2, 5))).contains(unit_vector(12, 2)));
  for (long n = 0; n <= 3; ++n)
    for (long np = 0; np <= 3; ++np)
      for (long x3 = -2; x3 <= 0; ++x3) {
        const RVector form = linear_form(G(), xi(x3, 1, n, np));
        const Subspace iso = isotropy_algebra(G(), form);
        EXPECT_TRUE(is_subalgebra(G(), iso));
        EXPECT_EQ(iso.dim() + rref(skew_form_matrix(G(), form)).rank, 12u);
      }
}

TEST(Classify, Verdicts) {
  EXPECT_EQ(classify(xi(-1, 0, 1, 1)), RepClass(GenericCS{1, 1}));
  EXPECT_EQ(classify(xi(0, Rational(5, 2), 0, 3)), RepClass(NonGenericCS{Rational(5, 2), 0, 3}));
  EXPECT_EQ(classify(xi(1, 0, 1, 1)), RepClass(NotUnitarizable{}));
  EXPECT_EQ(classify(xi(-1, 0, 0, 1)), RepClass(NotUnitarizable{}));
  EXPECT_EQ(classify(xi(0, 7, 0, 0)), RepClass(Character{}));
  EXPECT_EQ(classify(xi(0, 0, -1, 2)), RepClass(NotUnitarizable{}));
  EXPECT_EQ(to_string(classify(xi(0, Rational(5, 2), 0, 3))), "NonGenericCS(5/2,0,3)");
  EXPECT_EQ(to_string(classify(xi(-3, 1, 2, 4))), "GenericCS(2,4)");
}

TEST(Classify, GenericVerdictIgnoresEta) {
  for (Rational eta : {Rational(0), Rational(-3), Rational(11, 7)})
    EXPECT_EQ(classify(xi(-2, eta, 2, 3)), RepClass(GenericCS{2, 3}));
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(xi(-1, 0, 2, 3), xi(-7, 5, 2, 3)));
  EXPECT_FALSE(equivalent(xi(0, 1, 2, 3), xi(0, 2, 2, 3)));
  EXPECT_TRUE(equivalent(xi(0, 1, 2, 3), xi(0, 1, 2, 3)));
  EXPECT_FALSE(equivalent(xi(0, 1, 0, 0), xi(0, 2, 0, 0)));
  EXPECT_FALSE(equivalent(xi(-1, 0, 1, 1), xi(0, 0, 1, 1)));
  EXPECT_THROW(equivalent(xi(1, 0, 1, 1), xi(-1, 0, 1, 1)), NotUnitarizableInput);
}

TEST(Genericity, CrosscheckSweep) {
  EXPECT_TRUE(genericity_crosscheck(G(), xi(-1, 0, 1, 1)));
  EXPECT_TRUE(genericity_crosscheck(G(), xi(0, 1, 1, 1)));
  for (long x3 = -2; x3 <= 0; ++x3)
    for (long n = 0; n <= 3; ++n)
      for (long np = 0; np <= 3; ++np) EXPECT_TRUE(genericity_crosscheck(G(), xi(x3, 0, n, np)));
}

TEST(RootSpaces, QValues) {
  EXPECT_EQ(root_spaces_q(G()), (std::array<long, 3>{1, 1, 0}));
  const Rational h(1, 2);
  EXPECT_EQ(root_space(G(), {-h, 0, h}), span_names({"A31"}));
  EXPECT_EQ(root_space(G(), {0, -h, h}), span_names({"A32"}));
  EXPECT_TRUE(root_space(G(), {-h, h, 0}).is_zero());
}

TEST(RootSpaces, QBound) {
  const std::array<long, 3> q{1, 1, 0};
  EXPECT_TRUE(satisfies_q_bound({Rational(1), Rational(1), Rational(2)}, q));
  EXPECT_FALSE(satisfies_q_bound({Rational(1, 2), Rational(1), Rational(1)}, q));
  EXPECT_FALSE(satisfies_q_bound({Rational(0), Rational(0), Rational(0)}, q));
}
