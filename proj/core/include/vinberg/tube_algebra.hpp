#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vinberg/lie_algebra.hpp"
#include "vinberg/subspace.hpp"

namespace vinberg {

/// Basis order used everywhere for the 12-dimensional algebra g of the tube
/// domain over the dual Vinberg cone.
inline constexpr std::array<std::string_view, 12> kTubeBasis = {
    "E1", "E2", "E3", "E31", "E32", "A1", "A2", "A3", "A31", "A32", "W1", "W2"};

/// The algebra g, parsed from the bundled g_vinberg_tube.json.
const LieAlgebra& tube_algebra();

/// True iff the algebra's basis names are exactly kTubeBasis, in order.
bool has_tube_basis(const LieAlgebra& algebra);

/// Named subspaces of g: "<E3>", "h3", "h3'", "h5", "a1", "s3", "s3'", "b", "<W1,W2>".
/// Throws std::out_of_range if the algebra lacks one of the required basis names.
std::map<std::string, Subspace> tube_subspaces(const LieAlgebra& algebra);

/// Ordered summands used to name ideals ("h5", "h3", "h3'", "a1", "s3", "s3'", "<E3>").
std::vector<std::pair<std::string, Subspace>> ideal_label_summands(const LieAlgebra& algebra);

/// The involution swapping the two SL2 factors: E1<->E2, E31<->E32, A1<->A2, A31<->A32, W1<->W2.
LinearMap swap_automorphism(const LieAlgebra& algebra);
/// -1 on every E and W, +1 on every A.
LinearMap sign_automorphism(const LieAlgebra& algebra);

}  // namespace vinberg
