#include "vinberg/siegel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "vinberg/errors.hpp"

namespace vinberg {

namespace {

Complex int_power(Complex base, long n) {
  Complex out(1.0, 0.0);
  const bool negative = n < 0;
  unsigned long e = negative ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) out *= base;
    base *= base;
    e >>= 1;
  }
  return negative ? Complex(1.0, 0.0) / out : out;
}

Complex unimodular_power(double base, double eta3) {
  return std::exp(Complex(0.0, 2.0 * eta3 * std::log(base)));
}

}  // namespace

SiegelPoint base_point() {
  const Complex i(0.0, 1.0);
  return {{i, i, i, Complex(0.0), Complex(0.0)}};
}

bool in_domain(const SiegelPoint& z) {
  const double y1 = z.z[0].imag();
  const double y2 = z.z[1].imag();
  const double y3 = z.z[2].imag();
  const double y4 = z.z[3].imag();
  const double y5 = z.z[4].imag();
  return y1 > 0 && y1 * y2 > 0 && y1 * y2 * y3 - y1 * y5 * y5 - y2 * y4 * y4 > 0;
}

Eigen::Matrix3cd to_matrix(const SiegelPoint& z) {
  Eigen::Matrix3cd m;
  m << z.z[0], 0.0, z.z[3], 0.0, z.z[1], z.z[4], z.z[3], z.z[4], z.z[2];
  return m;
}

Matrix6d to_double(const RMatrix& m) {
  if (m.rows() != 6 || m.cols() != 6) throw AmbientMismatch("expected a 6x6 matrix");
  Matrix6d out;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) out(r, c) = m(r, c).to_double();
  return out;
}

SiegelPoint act(const Matrix6d& g, const SiegelPoint& z) {
  const Eigen::Matrix3cd zm = to_matrix(z);
  const Eigen::Matrix3cd a = g.block<3, 3>(0, 0).cast<Complex>();
  const Eigen::Matrix3cd b = g.block<3, 3>(0, 3).cast<Complex>();
  const Eigen::Matrix3cd c = g.block<3, 3>(3, 0).cast<Complex>();
  const Eigen::Matrix3cd d = g.block<3, 3>(3, 3).cast<Complex>();
  const Eigen::Matrix3cd num = a * zm + b;
  const Eigen::Matrix3cd den = c * zm + d;
  if (std::abs(den.determinant()) < kSingularTolerance) throw SingularDenominator("det(CZ + D) vanishes");
  // W = num * den^-1, i.e. den^T W^T = num^T.
  const Eigen::Matrix3cd w = den.transpose().partialPivLu().solve(num.transpose()).transpose();
  if (std::abs(w(0, 1)) >= kPatternTolerance || std::abs(w(1, 0)) >= kPatternTolerance) {
    throw PatternViolation("image has a nonzero (1,2) entry");
  }
  SiegelPoint out{{w(0, 0), w(1, 1), w(2, 2), 0.5 * (w(0, 2) + w(2, 0)), 0.5 * (w(1, 2) + w(2, 1))}};
  if (!in_domain(out)) throw PatternViolation("image left the domain");
  return out;
}

SiegelPoint act(const GroupElement& g, const SiegelPoint& z) { return act(to_double(g.matrix()), z); }

bool symplectic_check(const RMatrix& g) {
  if (g.rows() != 6 || g.cols() != 6) return false;
  auto block = [&](std::size_t r0, std::size_t c0) {
    RMatrix out(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) out(r, c) = g(r0 + r, c0 + c);
    return out;
  };
  const RMatrix a = block(0, 0), b = block(0, 3), c = block(3, 0), d = block(3, 3);
  const RMatrix atc = a.transpose() * c;
  const RMatrix btd = b.transpose() * d;
  return atc == atc.transpose() && btd == btd.transpose() &&
         a.transpose() * d - c.transpose() * b == RMatrix::identity(3);
}

bool symplectic_check(const GroupElement& g) { return symplectic_check(g.matrix()); }

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  constexpr int q = 6;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  const Eigen::MatrixXd x = a / std::ldexp(1.0, squarings);
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd numer = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd denom = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double coeff = 1.0;
  for (int k = 1; k <= q; ++k) {
    coeff *= static_cast<double>(q - k + 1) / static_cast<double>(k * (2 * q - k + 1));
    power = power * x;
    numer += coeff * power;
    denom += (k % 2 == 0 ? coeff : -coeff) * power;
  }
  Eigen::MatrixXd e = denom.partialPivLu().solve(numer);
  for (int s = 0; s < squarings; ++s) e = e * e;
  return e;
}

Matrix6d exp_algebra(std::span<const double> coeffs) {
  if (coeffs.size() != 12) throw AmbientMismatch("expected 12 coefficients");
  Matrix6d x = Matrix6d::Zero();
  const auto& basis = basis_matrices();
  for (std::size_t i = 0; i < 12; ++i) x += coeffs[i] * to_double(basis[i]);
  return expm(x);
}

double membership_residual(const Matrix6d& g) {
  static constexpr int kZeros[][2] = {{0, 1}, {0, 2}, {0, 4}, {1, 0}, {1, 2}, {1, 3}, {3, 1}, {3, 2}, {3, 4},
                                      {4, 0}, {4, 2}, {4, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
  const double a3 = g(2, 2);
  if (!(a3 > 0)) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  auto note = [&](double v) { worst = std::max(worst, std::abs(v)); };
  for (const auto& rc : kZeros) note(g(rc[0], rc[1]));
  note(a3 * g(5, 5) - 1.0);
  note(g(0, 0) * g(3, 3) - g(0, 3) * g(3, 0) - 1.0);
  note(g(1, 1) * g(4, 4) - g(1, 4) * g(4, 1) - 1.0);
  for (int i = 0; i < 2; ++i) {
    const double a = g(i, i), b = g(i, i + 3), c = g(i + 3, i), d = g(i + 3, i + 3);
    const double lp = -g(i + 3, 5), mp = g(i, 5);
    note(g(2, i) - a3 * (a * lp + c * mp));
    note(g(2, i + 3) - a3 * (b * lp + d * mp));
  }
  return worst;
}

Complex multiplier_m(const Matrix6d& g, const SiegelPoint& z, const MultiplierParams& p) {
  const double c1 = g(3, 0), d1 = g(3, 3), c2 = g(4, 1), d2 = g(4, 4);
  return int_power(c1 * z.z[0] + d1, p.n) * int_power(c2 * z.z[1] + d2, p.nprime) *
         unimodular_power(g(2, 2), p.eta3);
}

Complex multiplier_m(const GroupElement& g, const SiegelPoint& z, const MultiplierParams& p) {
  return multiplier_m(to_double(g.matrix()), z, p);
}

Complex multiplier_tilde(const QuotientImage& t, std::pair<Complex, Complex> w, const MultiplierParams& p) {
  const Complex f1 = t.g1.c.to_double() * w.first + t.g1.d.to_double();
  const Complex f2 = t.g2.c.to_double() * w.second + t.g2.d.to_double();
  return int_power(f1, p.n) * int_power(f2, p.nprime) * unimodular_power(t.gamma.to_double(), p.eta3);
}

Complex act_halfplane(const SL2& s, Complex w) {
  const Complex den = s.c.to_double() * w + s.d.to_double();
  if (std::abs(den) < kSingularTolerance) throw SingularDenominator("cw + d vanishes");
  return (s.a.to_double() * w + s.b.to_double()) / den;
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<Complex>> coeffs) : coeffs_(std::move(coeffs)) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
      if (i + j > kMaxDegree && coeffs_[i][j] != Complex(0.0)) {
        throw std::invalid_argument("polynomial degree exceeds 8");
      }
}

Complex BivariatePolynomial::operator()(Complex w1, Complex w2) const {
  Complex total(0.0);
  Complex p1(1.0);
  for (const auto& row : coeffs_) {
    Complex p2(1.0);
    for (const Complex& c : row) {
      total += c * p1 * p2;
      p2 *= w2;
    }
    p1 *= w1;
  }
  return total;
}

double intertwiner_residual(const BivariatePolynomial& f, const GroupElement& g, const SiegelPoint& z,
                            const MultiplierParams& p) {
  const GroupElement gi = g.inverse();
  const SiegelPoint moved = act(gi, z);
  const Complex lhs = f(moved.z[0], moved.z[1]) / multiplier_m(gi, z, p);

  const QuotientImage ti = inverse(quotient_phi(g));
  const Complex w1 = act_halfplane(ti.g1, z.z[0]);
  const Complex w2 = act_halfplane(ti.g2, z.z[1]);
  const Complex rhs = f(w1, w2) / multiplier_tilde(ti, {z.z[0], z.z[1]}, p);
  return std::abs(lhs - rhs);
}

SiegelPoint random_siegel_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-1.0, 1.0);
  std::uniform_real_distribution<double> diag(0.5, 2.0);
  std::uniform_real_distribution<double> off(-0.3, 0.3);
  for (;;) {
    SiegelPoint z;
    for (int k = 0; k < 3; ++k) z.z[k] = Complex(re(rng), diag(rng));
    for (int k = 3; k < 5; ++k) z.z[k] = Complex(re(rng), off(rng));
    if (in_domain(z)) return z;
  }
}

std::string siegel_point_to_json(const SiegelPoint& z) {
  nlohmann::json j = nlohmann::json::array();
  for (const Complex& c : z.z) {
    j.push_back(c.real());
    j.push_back(c.imag());
  }
  return j.dump();
}

SiegelPoint parse_siegel_point(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("siegel point: ") + e.what());
  }
  if (!j.is_array() || j.size() != 10) throw ParseError("siegel point: expected an array of 10 numbers");
  SiegelPoint z;
  for (std::size_t k = 0; k < 5; ++k) {
    if (!j[2 * k].is_number() || !j[2 * k + 1].is_number()) throw ParseError("siegel point: non-numeric entry");
    z.z[k] = Complex(j[2 * k].get<double>(), j[2 * k + 1].get<double>());
  }
  return z;
}

}  // namespace vinberg
