#include "vinberg/tube_algebra.hpp"

#include <initializer_list>

#include "vinberg/algebra_io.hpp"

namespace vinberg {

namespace detail {
extern const std::string_view kBundledAlgebraJson;
}

namespace {

Subspace span_of(const LieAlgebra& algebra, std::initializer_list<std::string_view> names) {
  std::vector<RVector> vs;
  for (auto n : names) vs.push_back(unit_vector(algebra.dim(), algebra.index_of(n)));
  return Subspace::span(algebra.dim(), vs);
}

LinearMap permutation_map(const LieAlgebra& algebra,
                          std::initializer_list<std::pair<std::string_view, std::string_view>> swaps) {
  const std::size_t n = algebra.dim();
  RMatrix m = RMatrix::identity(n);
  for (auto [a, b] : swaps) {
    const std::size_t i = algebra.index_of(a);
    const std::size_t j = algebra.index_of(b);
    m(i, i) = 0;
    m(j, j) = 0;
    m(i, j) = 1;
    m(j, i) = 1;
  }
  return {m};
}

}  // namespace

const LieAlgebra& tube_algebra() {
  static const LieAlgebra algebra = parse_algebra(detail::kBundledAlgebraJson);
  return algebra;
}

bool has_tube_basis(const LieAlgebra& algebra) {
  if (algebra.dim() != kTubeBasis.size()) return false;
  for (std::size_t i = 0; i < kTubeBasis.size(); ++i) {
    if (algebra.name(i) != kTubeBasis[i]) return false;
  }
  return true;
}

std::map<std::string, Subspace> tube_subspaces(const LieAlgebra& algebra) {
  const auto& g = algebra;
  return {
      {"<E3>", span_of(g, {"E3"})},
      {"h3", span_of(g, {"E3", "E31", "A31"})},
      {"h3'", span_of(g, {"E3", "E32", "A32"})},
      {"h5", span_of(g, {"E3", "E31", "E32", "A31", "A32"})},
      {"a1", span_of(g, {"A3"})},
      {"s3", span_of(g, {"E1", "A1", "W1"})},
      {"s3'", span_of(g, {"E2", "A2", "W2"})},
      {"b", span_of(g, {"E1", "E2", "E3", "E31", "E32", "A1", "A2", "A3", "A31", "A32"})},
      {"<W1,W2>", span_of(g, {"W1", "W2"})},
  };
}

std::vector<std::pair<std::string, Subspace>> ideal_label_summands(const LieAlgebra& algebra) {
  auto named = tube_subspaces(algebra);
  std::vector<std::pair<std::string, Subspace>> out;
  for (const char* key : {"h5", "h3", "h3'", "a1", "s3", "s3'", "<E3>"}) out.emplace_back(key, named.at(key));
  return out;
}

LinearMap swap_automorphism(const LieAlgebra& algebra) {
  return permutation_map(algebra, {{"E1", "E2"}, {"E31", "E32"}, {"A1", "A2"}, {"A31", "A32"}, {"W1", "W2"}});
}

LinearMap sign_automorphism(const LieAlgebra& algebra) {
  RMatrix m = RMatrix::identity(algebra.dim());
  for (auto name : {"E1", "E2", "E3", "E31", "E32", "W1", "W2"}) {
    const std::size_t i = algebra.index_of(name);
    m(i, i) = -1;
  }
  return {m};
}

}  // namespace vinberg
