#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vinberg/errors.hpp"
#include "vinberg/model_checks.hpp"
#include "vinberg/tube_algebra.hpp"
#include "vinberg/siegel.hpp"

using namespace vinberg;

namespace {

const Complex I(0.0, 1.0);

std::size_t idx(std::string_view n) { return tube_algebra().index_of(n); }

std::array<double, 12> coeffs_of(std::string_view name, double t) {
  std::array<double, 12> c{};
  c[idx(name)] = t;
  return c;
}

double distance(const SiegelPoint& u, const SiegelPoint& v) {
  double d = 0;
  for (std::size_t k = 0; k < 5; ++k) d = std::max(d, std::abs(u.z[k] - v.z[k]));
  return d;
}

}  // namespace

TEST(Domain, LeadingMinors) {
  EXPECT_TRUE(in_domain(base_point()));
  EXPECT_FALSE(in_domain({{I, I, I, 2.0 * I, 0.0}}));
  EXPECT_FALSE(in_domain({{-I, I, I, 0.0, 0.0}}));
  // Independent: smallest eigenvalue of Im z.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 500; ++t) {
    SiegelPoint z{{Complex(0, u(rng)), Complex(0, u(rng)), Complex(0, u(rng)), Complex(0, u(rng)),
                   Complex(0, u(rng))}};
    const Eigen::Matrix3d y = to_matrix(z).imag();
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(y).eigenvalues().minCoeff();
    if (std::abs(lmin) > 1e-9) EXPECT_EQ(in_domain(z), lmin > 0);
  }
}

TEST(Expm, NilpotentRotationAndZero) {
  const Matrix6d id = Matrix6d::Identity();
  EXPECT_LT((exp_algebra(std::array<double, 12>{}) - id).cwiseAbs().maxCoeff(), 1e-15);
  const Matrix6d xe3 = to_double(basis_matrices()[idx("E3")]);
  for (double t : {-3.0, 0.5, 2.0}) {
    EXPECT_LT((exp_algebra(coeffs_of("E3", t)) - (id + t * xe3)).cwiseAbs().maxCoeff(), 1e-14);
    const Matrix6d r = exp_algebra(coeffs_of("W1", t));
    EXPECT_NEAR(r(0, 0), std::cos(t), 1e-13);
    EXPECT_NEAR(r(3, 3), std::cos(t), 1e-13);
    EXPECT_NEAR(r(3, 0), std::sin(t), 1e-13);
    EXPECT_NEAR(r(0, 3), -std::sin(t), 1e-13);
  }
}

TEST(Expm, ResultIsMemberAndMatchesEigen) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    std::array<double, 12> c;
    for (auto& v : c) v = u(rng);
    const Matrix6d e = exp_algebra(c);
    EXPECT_LT(membership_residual(e), 1e-10);
    // exp(X) exp(-X) = I
    std::array<double, 12> neg;
    for (std::size_t k = 0; k < 12; ++k) neg[k] = -c[k];
    EXPECT_LT((e * exp_algebra(neg) - Matrix6d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  }
  // Large-norm input exercises the squaring phase: exp(5 A3) scales by e^(5/2).
  const Matrix6d big = exp_algebra(coeffs_of("A3", 5.0));
  EXPECT_NEAR(big(2, 2), std::exp(2.5), 1e-10);
  EXPECT_NEAR(big(5, 5), std::exp(-2.5), 1e-14);
}

TEST(Act, KnownImages) {
  GroupParams p;
  p.a3 = 2;
  const SiegelPoint w = act(GroupElement::from_params(p), base_point());
  EXPECT_LT(distance(w, {{I, I, 4.0 * I, 0.0, 0.0}}), 1e-14);

  const SiegelPoint z{{Complex(0.1, 1.2), Complex(-0.3, 0.9), Complex(0.2, 1.5), Complex(0.05, 0.2),
                       Complex(0.0, -0.1)}};
  ASSERT_TRUE(in_domain(z));
  SiegelPoint shifted = z;
  shifted.z[2] += 0.7;
  EXPECT_LT(distance(act(exp_algebra(coeffs_of("E3", 0.7)), z), shifted), 1e-14);

  for (int t = -2; t <= 2; ++t) {
    EXPECT_LT(distance(act(exp_algebra(coeffs_of("W1", t)), base_point()), base_point()), 1e-10);
    EXPECT_LT(distance(act(exp_algebra(coeffs_of("W2", t)), base_point()), base_point()), 1e-10);
  }
}

TEST(Act, Errors) {
  Matrix6d bad = Matrix6d::Identity();
  bad(0, 1) = 1.0;  // breaks the sparse pattern of the image
  SiegelPoint z = base_point();
  z.z[3] = Complex(0.3, 0.2);
  EXPECT_THROW(act(bad, z), PatternViolation);
  Matrix6d singular = Matrix6d::Zero();
  EXPECT_THROW(act(singular, base_point()), SingularDenominator);
}

TEST(Multiplier, Examples) {
  const MultiplierParams p{1, 0, 0.0};
  EXPECT_LT(std::abs(multiplier_m(GroupElement(), base_point(), p) - 1.0), 1e-15);
  GroupParams q;
  q.sl2_1 = {1, 0, 1, 1};
  EXPECT_LT(std::abs(multiplier_m(GroupElement::from_params(q), base_point(), p) - (I + 1.0)), 1e-15);

  Matrix6d g = Matrix6d::Identity();
  g(2, 2) = std::exp(1.0);
  g(5, 5) = std::exp(-1.0);
  const Complex m = multiplier_m(g, base_point(), {0, 0, 0.5});
  EXPECT_LT(std::abs(m - std::exp(I)), 1e-15);
  EXPECT_NEAR(std::abs(m), 1.0, 1e-15);

  QuotientImage t;
  t.gamma = 4;
  EXPECT_LT(std::abs(multiplier_tilde(t, {I, I}, {0, 0, 0.25}) - std::exp(I * std::log(4.0) * 0.5)), 1e-15);
  EXPECT_LT(std::abs(multiplier_tilde(QuotientImage{}, {I, 2.0 * I}, {3, 2, 1.0}) - 1.0), 1e-15);
}

TEST(Halfplane, Action) {
  EXPECT_EQ(act_halfplane(SL2{}, I), I);
  EXPECT_LT(std::abs(act_halfplane(SL2{1, 1, 0, 1}, I) - (I + 1.0)), 1e-15);
  EXPECT_THROW(act_halfplane(SL2{0, -1, 1, 0}, Complex(0.0)), SingularDenominator);
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    const GroupParams p = random_group_params(rng);
    const SiegelPoint z = random_siegel_point(rng);
    const SiegelPoint w = act(GroupElement::from_params(p), z);
    EXPECT_LT(std::abs(w.z[0] - act_halfplane(p.sl2_1, z.z[0])), 1e-10);
    EXPECT_LT(std::abs(w.z[1] - act_halfplane(p.sl2_2, z.z[1])), 1e-10);
    EXPECT_GT(act_halfplane(p.sl2_1, z.z[0]).imag(), 0.0);
  }
}

TEST(Polynomial, DegreeGuardAndEvaluation) {
  EXPECT_THROW(BivariatePolynomial({std::vector<Complex>(10, 1.0)}), std::invalid_argument);
  const BivariatePolynomial f({{0.0, 0.0}, {0.0, 1.0}});  // w1 * w2
  EXPECT_EQ(f(2.0, 3.0), Complex(6.0));
}

TEST(Intertwiner, Residuals) {
  const BivariatePolynomial one(std::vector<std::vector<Complex>>{{1.0}});
  const BivariatePolynomial prod({{0.0, 0.0}, {0.0, 1.0}});
  EXPECT_EQ(intertwiner_residual(prod, GroupElement(), base_point(), {2, 1, 0.5}), 0.0);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> deg(0, 3);
  std::uniform_real_distribution<double> eta(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const GroupElement g = GroupElement::from_params(random_group_params(rng));
    const SiegelPoint z = random_siegel_point(rng);
    const MultiplierParams p{deg(rng), deg(rng), eta(rng)};
    EXPECT_LT(intertwiner_residual(one, g, z, p), 1e-10);
    EXPECT_LT(intertwiner_residual(prod, g, z, p), 1e-9);
  }
}

TEST(PointJson, RoundTrip) {
  const SiegelPoint z{{Complex(0.1, 1.2), Complex(-0.3, 0.9), Complex(0.2, 1.5), Complex(0.05, 0.2),
                       Complex(0.0, -0.1)}};
  const SiegelPoint back = parse_siegel_point(siegel_point_to_json(z));
  EXPECT_EQ(distance(z, back), 0.0);
  EXPECT_THROW(parse_siegel_point("[1,2,3]"), ParseError);
  EXPECT_THROW(parse_siegel_point("nope"), ParseError);
}

TEST(ModelSuites, DefaultRunPassesAndTightToleranceFails) {
  const auto ok = run_model_suites(42, 100, 1e-9);
  for (const auto& s : ok) EXPECT_TRUE(s.passed) << s.name << " " << s.max_residual;
  EXPECT_EQ(ok.size(), 10u);
  const auto tight = run_model_suites(42, 10, 1e-15);
  bool any_failed = false;
  for (const auto& s : tight) any_failed = any_failed || !s.passed;
  EXPECT_TRUE(any_failed);
  EXPECT_THROW(run_model_suites(42, 0, 1e-9), std::invalid_argument);
}

TEST(ModelSuites, Deterministic) {
  const auto a = run_model_suites(7, 20, 1e-9);
  const auto b = run_model_suites(7, 20, 1e-9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].max_residual, b[k].max_residual);
}
