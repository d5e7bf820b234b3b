#include "vinberg/ideal_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "vinberg/module_check.hpp"

namespace vinberg {

namespace {

using Summands = std::vector<std::pair<std::string, Subspace>>;

void insert_unique(std::vector<Subspace>& set, Subspace s) {
  if (std::find(set.begin(), set.end(), s) == set.end()) set.push_back(std::move(s));
}

/// Every nonempty combination of summands, ordered by size then by index order.
std::vector<std::pair<std::string, Subspace>> labelled_sums(const Summands& summands) {
  std::vector<std::pair<std::string, Subspace>> out;
  const std::size_t m = summands.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::string label;
      Subspace sum;
      bool first = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (!pick[i]) continue;
        label += (first ? "" : "+") + summands[i].first;
        sum = first ? summands[i].second : subspace_sum(sum, summands[i].second);
        first = false;
      }
      out.emplace_back(std::move(label), std::move(sum));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::string label_from(const Subspace& ideal, const std::vector<std::pair<std::string, Subspace>>& sums) {
  if (ideal.is_zero()) return "0";
  if (ideal.is_full()) return "g";
  for (const auto& [label, s] : sums) {
    if (s == ideal) return label;
  }
  return "dim=" + std::to_string(ideal.dim());
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Certified:
      return "Certified";
    case CertificateStatus::CertifiedUpToDim:
      return "CertifiedUpToDim";
    case CertificateStatus::InfiniteFamilyDetected:
      return "InfiniteFamilyDetected";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> covering_relations(const std::vector<Subspace>& ideals) {
  const std::size_t n = ideals.size();
  auto strictly_below = [&](std::size_t a, std::size_t b) {
    return ideals[a].dim() < ideals[b].dim() && ideals[b].contains(ideals[a]);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strictly_below(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (strictly_below(i, k) && strictly_below(k, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

Certificate certify(const LieAlgebra& algebra, const IdealLattice& lattice) {
  Certificate cert;
  bool failed = false;
  bool undecided = false;
  for (const auto& [lo, hi] : lattice.coverings) {
    GapCheck check{lo, hi, lattice.ideals[hi].dim() - lattice.ideals[lo].dim(), std::nullopt};
    if (check.gap_dim <= kMaxDecidableGap) {
      check.irreducible = is_irreducible(quotient_action(algebra, lattice.ideals[lo], lattice.ideals[hi]));
      if (!*check.irreducible) failed = true;
    } else {
      undecided = true;
    }
    cert.gap_checks.push_back(check);
  }

  for (std::size_t base = 0; base < lattice.ideals.size(); ++base) {
    std::vector<std::size_t> atoms;
    for (const auto& [lo, hi] : lattice.coverings) {
      if (lo == base) atoms.push_back(hi);
    }
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      for (std::size_t b = a + 1; b < atoms.size(); ++b) {
        SiblingCheck check{base, atoms[a], atoms[b], 0, false};
        if (lattice.ideals[atoms[a]].dim() == lattice.ideals[atoms[b]].dim()) {
          auto space = intertwiners(quotient_action(algebra, lattice.ideals[base], lattice.ideals[atoms[a]]),
                                    quotient_action(algebra, lattice.ideals[base], lattice.ideals[atoms[b]]));
          check.intertwiner_dim = space.size();
          check.isomorphic = contains_invertible(space);
          if (check.isomorphic) failed = true;
        }
        cert.sibling_checks.push_back(check);
      }
    }
  }

  if (failed) {
    cert.status = CertificateStatus::InfiniteFamilyDetected;
  } else if (undecided) {
    cert.status = CertificateStatus::CertifiedUpToDim;
  }
  return cert;
}

IdealLattice enumerate_ideals(const LieAlgebra& algebra, std::size_t max_count) {
  if (max_count < 2) throw std::invalid_argument("max_count must be at least 2");
  const std::size_t n = algebra.dim();
  std::vector<Subspace> ideals;
  insert_unique(ideals, Subspace(n));
  insert_unique(ideals, Subspace::full(n));
  for (std::size_t i = 0; i < n; ++i) {
    const RVector e = unit_vector(n, i);
    insert_unique(ideals, ideal_closure(algebra, Subspace::span(n, std::span(&e, 1))));
  }
  auto check_count = [&] {
    if (ideals.size() > max_count) {
      throw IdealCountExceeded("more than " + std::to_string(max_count) + " ideals generated");
    }
  };
  check_count();

  // Sums and intersections of ideals are ideals, so closure under them is the whole fixpoint.
  std::size_t processed = 0;
  while (processed < ideals.size()) {
    const std::size_t current = ideals.size();
    for (std::size_t a = 0; a < current; ++a) {
      for (std::size_t b = std::max(a + 1, processed); b < current; ++b) {
        insert_unique(ideals, subspace_sum(ideals[a], ideals[b]));
        insert_unique(ideals, subspace_intersect(ideals[a], ideals[b]));
        check_count();
      }
    }
    processed = current;
  }

  std::sort(ideals.begin(), ideals.end());
  IdealLattice lattice;
  lattice.ideals = std::move(ideals);
  lattice.coverings = covering_relations(lattice.ideals);
  lattice.certificate = certify(algebra, lattice);
  if (lattice.certificate.status == CertificateStatus::InfiniteFamilyDetected) {
    throw InfiniteFamilyDetected("ideal lattice is not finite or not fully generated", std::move(lattice));
  }
  return lattice;
}

std::string ideal_label(const Subspace& ideal, const Summands& summands) {
  return label_from(ideal, labelled_sums(summands));
}

std::string to_dot(const IdealLattice& lattice, const Summands& summands) {
  const auto sums = labelled_sums(summands);
  std::ostringstream os;
  os << "digraph ideals {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(label_from(lattice.ideals[i], sums)) << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.coverings) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_json(const IdealLattice& lattice, const Summands& summands) {
  const auto sums = labelled_sums(summands);
  nlohmann::ordered_json doc;
  doc["count"] = lattice.ideals.size();
  doc["status"] = to_string(lattice.certificate.status);
  doc["ideals"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
    const auto& ideal = lattice.ideals[i];
    nlohmann::ordered_json entry;
    entry["index"] = i;
    entry["label"] = label_from(ideal, sums);
    entry["dim"] = ideal.dim();
    entry["basis"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& x : ideal.basis().row_span(r)) row.push_back(x.str());
      entry["basis"].push_back(std::move(row));
    }
    doc["ideals"].push_back(std::move(entry));
  }
  doc["coverings"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : lattice.coverings) doc["coverings"].push_back({lo, hi});
  nlohmann::ordered_json gaps = nlohmann::ordered_json::array();
  for (const auto& g : lattice.certificate.gap_checks) {
    nlohmann::ordered_json entry{{"lower", g.lower}, {"upper", g.upper}, {"gap_dim", g.gap_dim}};
    entry["irreducible"] = g.irreducible ? nlohmann::ordered_json(*g.irreducible) : nlohmann::ordered_json();
    gaps.push_back(std::move(entry));
  }
  doc["gap_checks"] = std::move(gaps);
  nlohmann::ordered_json siblings = nlohmann::ordered_json::array();
  for (const auto& s : lattice.certificate.sibling_checks) {
    siblings.push_back({{"base", s.base},
                        {"left", s.left},
                        {"right", s.right},
                        {"intertwiner_dim", s.intertwiner_dim},
                        {"isomorphic", s.isomorphic}});
  }
  doc["sibling_checks"] = std::move(siblings);
  return doc.dump(2);
}

}  // namespace vinberg
