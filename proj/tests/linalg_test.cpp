#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/subspace.hpp"

using vinberg::Rational;
using vinberg::RMatrix;
using vinberg::RVector;
using vinberg::Subspace;

TEST(Rational, NormalizesToLowestTerms) {
  Rational q(6, -4);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("3e-2"), Rational(3, 100));
  EXPECT_THROW(Rational::parse("1/0"), vinberg::ParseError);
  EXPECT_THROW(Rational::parse("abc"), vinberg::ParseError);
}

TEST(Rational, ArithmeticIsExact) {
  Rational sum;
  for (long k = 1; k <= 10; ++k) sum += Rational(1, k * (k + 1));
  EXPECT_EQ(sum, Rational(10, 11));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
}

TEST(Rational, FromDoubleIsDyadic) {
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
  EXPECT_EQ(Rational::from_double(-2.0), Rational(-2));
}

TEST(Rref, IdentityAndRankOne) {
  auto id = vinberg::rref(RMatrix::identity(2));
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.reduced, RMatrix::identity(2));

  auto r = vinberg::rref(RMatrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, (RMatrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, IsIdempotentAndMatchesOracleRank) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int t = 0; t < 40; ++t) {
    RMatrix m(5, 7);
    oracle::Mat o = oracle::zeros(5, 7);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        // Low-rank-ish: row 4 = row 0 + row 1 half the time.
        long v = d(rng);
        m(i, j) = v;
        o[i][j] = v;
      }
    if (t % 2 == 0) {
      for (std::size_t j = 0; j < 7; ++j) {
        m(4, j) = m(0, j) + m(1, j);
        o[4][j] = o[0][j] + o[1][j];
      }
    }
    auto r = vinberg::rref(m);
    EXPECT_EQ(r.rank, oracle::rank(o));
    EXPECT_EQ(vinberg::rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(vinberg::kernel(m).dim() + r.rank, m.cols());
  }
}

TEST(Matrix, InverseAndDeterminant) {
  RMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(m * m.inverse(), RMatrix::identity(3));
  EXPECT_EQ(m.determinant(), Rational(18));
  EXPECT_THROW((RMatrix{{1, 2}, {2, 4}}.inverse()), vinberg::SingularMatrix);
}

TEST(Kernel, ZeroAndIdentity) {
  EXPECT_TRUE(vinberg::kernel(RMatrix(3, 3)).is_full());
  EXPECT_TRUE(vinberg::kernel(RMatrix::identity(3)).is_zero());
}

TEST(Subspace, SumIntersectAndContainment) {
  const auto e1 = vinberg::unit_vector(3, 0);
  const auto e2 = vinberg::unit_vector(3, 1);
  Subspace a = Subspace::span(3, std::vector<RVector>{e1});
  Subspace b = Subspace::span(3, std::vector<RVector>{e2});
  Subspace s = vinberg::subspace_sum(a, b);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(vinberg::contains(s, e1 + e2));
  EXPECT_FALSE(vinberg::contains(s, vinberg::unit_vector(3, 2)));
  EXPECT_TRUE(vinberg::subspace_intersect(a, b).is_zero());
  EXPECT_EQ(vinberg::subspace_intersect(s, s), s);
  EXPECT_THROW(vinberg::subspace_sum(a, Subspace::full(4)), vinberg::AmbientMismatch);
}

TEST(Subspace, CanonicalFormMakesEqualityStructural) {
  Subspace u = Subspace::span(3, std::vector<RVector>{RVector{1, 1, 0}, RVector{1, -1, 0}});
  Subspace v = Subspace::span(3, std::vector<RVector>{RVector{2, 0, 0}, RVector{0, 5, 0}});
  EXPECT_EQ(u, v);
}

TEST(Subspace, DimensionFormulaOnRandomPairs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-2, 2);
  std::uniform_int_distribution<int> k(0, 4);
  for (int t = 0; t < 50; ++t) {
    auto random_space = [&] {
      std::vector<RVector> rows(k(rng), RVector(6));
      for (auto& r : rows)
        for (auto& x : r) x = d(rng);
      return Subspace::span(6, rows);
    };
    Subspace u = random_space();
    Subspace v = random_space();
    Subspace s = vinberg::subspace_sum(u, v);
    Subspace i = vinberg::subspace_intersect(u, v);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
    EXPECT_TRUE(s.contains(u) && s.contains(v));
    EXPECT_TRUE(u.contains(i) && v.contains(i));
  }
}
