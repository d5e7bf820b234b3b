#pragma once

#include <array>
#include <complex>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vinberg/group_model.hpp"

namespace vinberg {

using Complex = std::complex<double>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// z = [[z1, 0, z4], [0, z2, z5], [z4, z5, z3]].
struct SiegelPoint {
  std::array<Complex, 5> z{};
};

/// i * I3.
SiegelPoint base_point();

/// Im z positive definite, decided by the three leading principal minors.
bool in_domain(const SiegelPoint& z);

Eigen::Matrix3cd to_matrix(const SiegelPoint& z);

Matrix6d to_double(const RMatrix& m);

inline constexpr double kSingularTolerance = 1e-12;
inline constexpr double kPatternTolerance = 1e-12;

/// (A Z + B)(C Z + D)^-1 with the 3x3 blocks of g.
/// Throws SingularDenominator if |det(CZ + D)| < 1e-12, PatternViolation if the
/// image has |(1,2) entry| >= 1e-12, is not symmetric, or leaves the domain.
SiegelPoint act(const Matrix6d& g, const SiegelPoint& z);
SiegelPoint act(const GroupElement& g, const SiegelPoint& z);

/// A^T C and B^T D symmetric and A^T D - C^T B = I, exactly.
bool symplectic_check(const RMatrix& g);
bool symplectic_check(const GroupElement& g);

/// Matrix exponential by scaling and squaring around a [6/6] Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);
/// exp of sum_i coeffs[i] X_i.
Matrix6d exp_algebra(std::span<const double> coeffs);

/// Largest violation of the membership conditions for a floating-point matrix.
double membership_residual(const Matrix6d& g);

struct MultiplierParams {
  long n = 0;
  long nprime = 0;
  double eta3 = 0.0;
};

/// (c1 z1 + d1)^n (c2 z2 + d2)^n' exp(2 i eta3 ln a3).
Complex multiplier_m(const Matrix6d& g, const SiegelPoint& z, const MultiplierParams& p);
Complex multiplier_m(const GroupElement& g, const SiegelPoint& z, const MultiplierParams& p);

/// (c1 w1 + d1)^n (c2 w2 + d2)^n' gamma^(2 i eta3) on the product of upper half-planes.
Complex multiplier_tilde(const QuotientImage& t, std::pair<Complex, Complex> w, const MultiplierParams& p);

/// (a w + b) / (c w + d). Throws SingularDenominator.
Complex act_halfplane(const SL2& s, Complex w);

/// f(w1, w2) = sum coeffs[i][j] w1^i w2^j with total degree <= 8.
class BivariatePolynomial {
 public:
  static constexpr std::size_t kMaxDegree = 8;

  BivariatePolynomial() = default;
  /// Throws std::invalid_argument if a nonzero term exceeds kMaxDegree.
  explicit BivariatePolynomial(std::vector<std::vector<Complex>> coeffs);

  Complex operator()(Complex w1, Complex w2) const;
  const std::vector<std::vector<Complex>>& coeffs() const { return coeffs_; }

 private:
  std::vector<std::vector<Complex>> coeffs_;
};

/// |tau_m(g) F_f (z) - F_{tau_m~(phi(g)) f} (z)| with F_f(z) = f(z1, z2).
double intertwiner_residual(const BivariatePolynomial& f, const GroupElement& g, const SiegelPoint& z,
                            const MultiplierParams& p);

/// A point near i I3: real parts in [-1, 1], Im z1..z3 in [1/2, 2], Im z4, z5 in [-0.3, 0.3].
SiegelPoint random_siegel_point(std::mt19937_64& rng);

/// Ten numbers [re z1, im z1, ..., re z5, im z5].
std::string siegel_point_to_json(const SiegelPoint& z);
/// Accepts the layout of siegel_point_to_json. Throws ParseError.
SiegelPoint parse_siegel_point(std::string_view json_text);

}  // namespace vinberg
