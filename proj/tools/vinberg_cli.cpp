// vinberg: batch front end for the tube-domain Lie algebra workbench.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "vinberg/algebra_io.hpp"
#include "vinberg/coadjoint.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/group_model.hpp"
#include "vinberg/ideal_lattice.hpp"
#include "vinberg/model_checks.hpp"
#include "vinberg/tube_algebra.hpp"
#include "vinberg/siegel.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string algebra_path;
  bool json = false;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

/// Input problems that should map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

vinberg::LieAlgebra load(const Globals& g) {
  if (g.algebra_path.empty()) return vinberg::tube_algebra();
  return vinberg::load_algebra(g.algebra_path);
}

std::vector<std::pair<std::string, vinberg::Subspace>> summands_for(const vinberg::LieAlgebra& L) {
  if (!vinberg::has_tube_basis(L)) return {};
  return vinberg::ideal_label_summands(L);
}

std::string span_string(const vinberg::LieAlgebra& L, const vinberg::Subspace& s) {
  std::string out = "<";
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (k) out += ",";
    out += vinberg::format_element(L, s.basis_vector(k));
  }
  return out + ">";
}

int algebra_verify(const Globals& g) {
  const vinberg::LieAlgebra L = load(g);
  const auto jacobi = vinberg::jacobi_violations(L);
  const bool tube = vinberg::has_tube_basis(L);
  std::vector<vinberg::ModelMismatch> model;
  if (tube) model = vinberg::verify_model(L);
  const std::size_t pairs = L.dim() * (L.dim() - 1) / 2;
  const bool ok = jacobi.empty() && model.empty();

  if (g.json) {
    ordered_json j;
    j["jacobi_violations"] = jacobi.size();
    ordered_json triples = ordered_json::array();
    for (const auto& v : jacobi) triples.push_back({L.name(v.i), L.name(v.j), L.name(v.k)});
    j["jacobi_triples"] = triples;
    j["model_checked"] = tube;
    j["model_pairs"] = tube ? pairs : 0;
    ordered_json mism = ordered_json::array();
    for (const auto& m : model) {
      mism.push_back({{"pair", {L.name(m.i), L.name(m.j)}},
                      {"expected", vinberg::format_element(L, m.expected)},
                      {"actual", vinberg::format_element(L, m.actual)}});
    }
    j["model_mismatches"] = mism;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "jacobi: " << jacobi.size() << " violations / model: ";
    if (!tube) {
      std::cout << "skipped (basis is not E1..W2)";
    } else if (model.empty()) {
      std::cout << pairs << " pairs OK";
    } else {
      std::cout << model.size() << " of " << pairs << " pairs differ";
    }
    std::cout << "\n";
    for (const auto& v : jacobi) {
      std::cout << "  jacobi (" << L.name(v.i) << ", " << L.name(v.j) << ", " << L.name(v.k)
                << "): " << vinberg::format_element(L, v.defect) << "\n";
    }
    for (const auto& m : model) {
      std::cout << "  [" << L.name(m.i) << ", " << L.name(m.j) << "]: table "
                << vinberg::format_element(L, m.expected) << ", matrices " << vinberg::format_element(L, m.actual)
                << "\n";
    }
  }
  return ok ? kOk : kFailed;
}

int ideals(const Globals& g, const std::string& dot_path, std::size_t max, std::optional<std::size_t> expect) {
  const vinberg::LieAlgebra L = load(g);
  const auto summands = summands_for(L);
  vinberg::IdealLattice lattice;
  int code = kOk;
  try {
    lattice = vinberg::enumerate_ideals(L, max);
  } catch (const vinberg::InfiniteFamilyDetected& e) {
    std::cerr << "vinberg: " << e.what() << "\n";
    lattice = e.partial();
    code = kFailed;
  }
  if (expect && lattice.ideals.size() != *expect) code = kFailed;
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw UsageError("cannot write " + dot_path);
    out << vinberg::to_dot(lattice, summands);
  }
  if (g.json) {
    std::cout << vinberg::lattice_to_json(lattice, summands) << "\n";
  } else {
    std::cout << lattice.ideals.size() << " ideals, " << vinberg::to_string(lattice.certificate.status) << "\n";
    if (expect && lattice.ideals.size() != *expect) std::cout << "expected " << *expect << " ideals\n";
  }
  return code;
}

int coadjoint_classify(const Globals& g, const std::string& xi3, const std::string& eta3, long n, long nprime,
                       bool with_kernel) {
  vinberg::XiParams p;
  p.xi3 = vinberg::Rational::parse(xi3);
  p.eta3 = vinberg::Rational::parse(eta3);
  p.n = n;
  p.nprime = nprime;
  const vinberg::RepClass verdict = vinberg::classify(p);

  std::optional<vinberg::Subspace> isotropy;
  bool crosscheck = true;
  std::optional<vinberg::LieAlgebra> L;
  if (with_kernel) {
    L = load(g);
    if (!vinberg::has_tube_basis(*L)) throw UsageError("--kernel needs an algebra with basis E1..W2");
    isotropy = vinberg::isotropy_algebra(*L, vinberg::linear_form(*L, p));
    crosscheck = vinberg::genericity_crosscheck(*L, p);
  }

  if (g.json) {
    ordered_json j;
    j["verdict"] = vinberg::verdict_name(verdict);
    j["n"] = n;
    j["nprime"] = nprime;
    j["eta3"] = p.eta3.str();
    if (isotropy) {
      j["isotropy_dim"] = isotropy->dim();
      ordered_json basis = ordered_json::array();
      for (std::size_t k = 0; k < isotropy->dim(); ++k) {
        ordered_json row = ordered_json::array();
        for (const auto& q : isotropy->basis_vector(k)) row.push_back(q.str());
        basis.push_back(row);
      }
      j["isotropy_basis"] = basis;
      j["crosscheck"] = crosscheck;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << vinberg::to_string(verdict);
    if (isotropy) {
      std::cout << "; isotropy = " << span_string(*L, *isotropy) << "; crosscheck " << (crosscheck ? "OK" : "FAILED");
    }
    std::cout << "\n";
  }
  return crosscheck ? kOk : kFailed;
}

int model_test(const Globals& g, std::size_t samples) {
  if (samples == 0) throw UsageError("--samples must be positive");
  const auto results = vinberg::run_model_suites(g.seed, samples, g.tol);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (g.json) {
    ordered_json j;
    j["seed"] = g.seed;
    j["samples"] = samples;
    j["tol"] = g.tol;
    ordered_json suites = ordered_json::array();
    for (const auto& r : results) {
      ordered_json s;
      s["name"] = r.name;
      s["exact"] = r.exact;
      s["samples"] = r.samples;
      s["failures"] = r.failures;
      if (!r.exact) s["max_residual"] = r.max_residual;
      s["passed"] = r.passed;
      suites.push_back(s);
    }
    j["suites"] = suites;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << std::left << std::setw(26) << r.name << std::right << std::setw(5) << r.samples << "  ";
      if (r.exact) {
        std::cout << std::setw(12) << "exact";
      } else {
        std::ostringstream res;
        res << std::scientific << std::setprecision(2) << r.max_residual;
        std::cout << std::setw(12) << res.str();
      }
      std::cout << "  " << (r.passed ? "OK" : "FAIL") << "\n";
    }
    std::cout << (ok ? "all suites passed" : "some suites failed") << "\n";
  }
  return ok ? kOk : kFailed;
}

int model_act(const Globals& g, const std::string& group_path, const std::string& point_path) {
  const auto element = vinberg::GroupElement::from_params(vinberg::parse_group_params(read_file(group_path)));
  const auto z = vinberg::parse_siegel_point(read_file(point_path));
  if (!vinberg::in_domain(z)) throw UsageError("point is not in the domain");
  const auto w = vinberg::act(element, z);
  if (g.json) {
    std::cout << vinberg::siegel_point_to_json(w) << "\n";
  } else {
    std::cout << std::setprecision(17);
    for (std::size_t k = 0; k < 5; ++k) {
      std::cout << "z" << (k + 1) << " = " << w.z[k].real() << (w.z[k].imag() < 0 ? " - " : " + ")
                << std::abs(w.z[k].imag()) << "i\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for the Lie algebra of the tube domain over the dual Vinberg cone", "vinberg"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--algebra", g.algebra_path, "Algebra JSON file (default: bundled algebra)");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Random seed for sampled suites")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance for floating-point suites")->capture_default_str();

  auto* algebra = app.add_subcommand("algebra", "Structure-constant checks");
  algebra->require_subcommand(1);
  auto* verify = algebra->add_subcommand("verify", "Jacobi identity and matrix-model cross-check");

  auto* ideals_cmd = app.add_subcommand("ideals", "Enumerate and certify the ideal lattice");
  std::string dot_path;
  std::size_t max_count = vinberg::kDefaultMaxIdeals;
  std::optional<std::size_t> expect;
  ideals_cmd->add_option("--dot", dot_path, "Write the Hasse diagram in Graphviz format");
  ideals_cmd->add_option("--max", max_count, "Abort when more ideals are found")->capture_default_str();
  ideals_cmd->add_option("--expect", expect, "Fail unless exactly this many ideals are found");

  auto* coadjoint = app.add_subcommand("coadjoint", "Coadjoint orbit computations");
  coadjoint->require_subcommand(1);
  auto* classify = coadjoint->add_subcommand("classify", "Classify the linear form xi(xi3, eta3, n, n')");
  std::string xi3, eta3;
  long n = 0, nprime = 0;
  bool with_kernel = false;
  classify->add_option("--xi3", xi3, "Rational xi3")->required();
  classify->add_option("--eta3", eta3, "Rational eta3")->required();
  classify->add_option("--n", n, "Integer n")->required();
  classify->add_option("--nprime", nprime, "Integer n'")->required();
  classify->add_flag("--kernel", with_kernel, "Also print the isotropy algebra and the genericity cross-check");

  auto* model = app.add_subcommand("model", "6x6 matrix model and Siegel-domain action");
  model->require_subcommand(1);
  auto* test = model->add_subcommand("test", "Run the seeded model suites");
  std::size_t samples = 100;
  test->add_option("--samples", samples, "Samples per suite")->capture_default_str();
  auto* act = model->add_subcommand("act", "Apply a group element to a point of the domain");
  std::string group_path, point_path;
  act->add_option("--group", group_path, "Group element JSON")->required();
  act->add_option("--point", point_path, "Point JSON: [re z1, im z1, ..., re z5, im z5]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return algebra_verify(g);
    if (*ideals_cmd) return ideals(g, dot_path, max_count, expect);
    if (*classify) return coadjoint_classify(g, xi3, eta3, n, nprime, with_kernel);
    if (*test) return model_test(g, samples);
    if (*act) return model_act(g, group_path, point_path);
  } catch (const vinberg::VerificationFailed& e) {
    std::cerr << "vinberg: " << e.what() << "\n";
    return kFailed;
  } catch (const vinberg::InfiniteFamilyDetected& e) {
    std::cerr << "vinberg: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "vinberg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
