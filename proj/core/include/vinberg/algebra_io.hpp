#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vinberg/lie_algebra.hpp"

namespace vinberg {

/// Reads the algebra document format:
///
///   {"dim": 3, "names": ["H", "X", "Y"],
///    "brackets": [["H", "X", {"X": "2"}], ["X", "Y", {"H": "1"}], ...]}
///
/// Mirrors are implied and unlisted pairs are zero. Coefficients are rational
/// strings ("p/q" or "p"); plain JSON integers are accepted too.
/// Throws ParseError on any malformed input.
LieAlgebra parse_algebra(std::string_view json_text);
LieAlgebra load_algebra(const std::filesystem::path& path);

/// Inverse of parse_algebra; lists each nonzero bracket once (i < j), keys in basis order.
std::string algebra_to_json(const LieAlgebra& algebra);

}  // namespace vinberg
