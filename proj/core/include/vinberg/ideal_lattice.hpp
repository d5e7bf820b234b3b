#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vinberg/errors.hpp"
#include "vinberg/lie_algebra.hpp"

namespace vinberg {

inline constexpr std::size_t kDefaultMaxIdeals = 512;
/// Largest covering gap whose irreducibility is decided exactly.
inline constexpr std::size_t kMaxDecidableGap = 3;

enum class CertificateStatus { Certified, CertifiedUpToDim, InfiniteFamilyDetected };

std::string to_string(CertificateStatus status);

/// Irreducibility of upper/lower as a g-module for one covering pair.
struct GapCheck {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t gap_dim = 0;
  /// std::nullopt when gap_dim exceeds kMaxDecidableGap.
  std::optional<bool> irreducible;
};

/// Two ideals covering the same base ideal; their quotients by the base compared as g-modules.
struct SiblingCheck {
  std::size_t base = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t intertwiner_dim = 0;
  bool isomorphic = false;
};

struct Certificate {
  std::vector<GapCheck> gap_checks;
  std::vector<SiblingCheck> sibling_checks;
  CertificateStatus status = CertificateStatus::Certified;
  /// Meaningful for CertifiedUpToDim: every gap up to this dimension was decided.
  std::size_t certified_up_to = kMaxDecidableGap;
};

struct IdealLattice {
  /// Canonical, deduplicated, ordered by dimension then basis entries.
  std::vector<Subspace> ideals;
  /// (i, j): ideals[i] is covered by ideals[j].
  std::vector<std::pair<std::size_t, std::size_t>> coverings;
  Certificate certificate;
};

/// Thrown by enumerate_ideals when the certificate finds a missed or continuous family.
class InfiniteFamilyDetected : public Error {
 public:
  InfiniteFamilyDetected(const std::string& what, IdealLattice partial)
      : Error(what), partial_(std::move(partial)) {}
  const IdealLattice& partial() const { return partial_; }

 private:
  IdealLattice partial_;
};

/// Closure of {0, g, ideal_closure(<x_i>)} under sums and intersections, then
/// covering relations and certification. Throws IdealCountExceeded or
/// InfiniteFamilyDetected.
IdealLattice enumerate_ideals(const LieAlgebra& algebra, std::size_t max_count = kDefaultMaxIdeals);

/// Hasse edges of the inclusion order, as index pairs (smaller, larger).
std::vector<std::pair<std::size_t, std::size_t>> covering_relations(const std::vector<Subspace>& ideals);

Certificate certify(const LieAlgebra& algebra, const IdealLattice& lattice);

/// Label of an ideal: "0", "g", the shortest "+"-joined combination of the
/// given summands that sums to it, or "dim=k".
std::string ideal_label(const Subspace& ideal, const std::vector<std::pair<std::string, Subspace>>& summands);

/// Graphviz digraph: one node per ideal, edges along coverings from smaller to larger.
std::string to_dot(const IdealLattice& lattice, const std::vector<std::pair<std::string, Subspace>>& summands);

/// JSON document with each ideal's label and canonical basis rows as rational strings.
std::string lattice_to_json(const IdealLattice& lattice,
                            const std::vector<std::pair<std::string, Subspace>>& summands);

}  // namespace vinberg
