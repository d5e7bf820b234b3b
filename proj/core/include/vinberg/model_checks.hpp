#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vinberg/group_model.hpp"
#include "vinberg/lie_algebra.hpp"

namespace vinberg {

struct SuiteResult {
  std::string name;
  bool exact = false;       // exact suites pass only with zero failures
  std::size_t samples = 0;
  std::size_t failures = 0;
  double max_residual = 0;  // floating-point suites only
  double threshold = 0;
  bool passed = false;
};

/// Seeded property suites over the 6x6 group model:
///   symplectic, ad_formulas, adjoint_homomorphism, phi_homomorphism (exact);
///   action_homomorphism, cocycle, multiplier_consistency, coordinate_compatibility,
///   intertwiner, isotropy (floating point, compared against tol; isotropy also against 1e-10).
/// Throws std::invalid_argument if samples == 0.
std::vector<SuiteResult> run_model_suites(std::uint64_t seed, std::size_t samples, double tol);

/// Ad(g^-1) on E1, E2, A31, A32, W1, W2 against the closed-form expansions in the
/// free parameters of g. Returns the number of mismatching generators (0..6).
std::size_t ad_formula_mismatches(const LieAlgebra& algebra, const GroupParams& p);

}  // namespace vinberg
