// Batch command-line surface. Exit codes: 0 success, 2 validation failure,
// 3 computation failure (RouteMismatch, UHeadroomExhausted, BudgetExceeded),
// 64 usage.
#include <CLI11.hpp>

#include "nchodge/builtin_rings.hpp"
#include "nchodge/chern.hpp"
#include "nchodge/coh_ring.hpp"
#include "nchodge/errors.hpp"
#include "nchodge/family.hpp"
#include "nchodge/graphs.hpp"
#include "nchodge/hp_lattice.hpp"
#include "nchodge/json_io.hpp"
#include "nchodge/pairing.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace nchodge;

// Set by report-style commands whose checks fail without throwing.
int g_status = 0;

RingPtr resolve_ring(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin::by_uri(spec);
  return load_ring(spec);
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void setup(CLI::App& app) {
  app.require_subcommand(1);

  auto* ring_cmd = app.add_subcommand("ring", "ring document operations");
  ring_cmd->require_subcommand(1);
  auto* ring_validate =
      ring_cmd->add_subcommand("validate", "run the full validation report");
  {
    auto ring = std::make_shared<std::string>();
    ring_validate->add_option("--ring", *ring, "builtin:<name> or a path")
        ->required();
    ring_validate->callback([ring] {
      ValidationReport rep = validate_ring(resolve_ring(*ring));
      std::cout << rep.str();
      if (!rep.ok()) g_status = 2;
    });
  }

  auto* todd = app.add_subcommand("todd", "Todd class of the tangent data");
  {
    auto ring = std::make_shared<std::string>();
    auto modified = std::make_shared<bool>(false);
    auto sqrt = std::make_shared<bool>(false);
    todd->add_option("--ring", *ring, "builtin:<name> or a path")->required();
    todd->add_flag("--modified", *modified, "use the square-root-free form");
    todd->add_flag("--sqrt", *sqrt, "take the multiplicative square root");
    todd->callback([ring, modified, sqrt] {
      RingPtr r = resolve_ring(*ring);
      CohClass t = *modified ? modified_todd_class(r) : todd_class(r);
      if (*sqrt) t = sqrt_class(t);
      std::cout << t.str() << "\n";
    });
  }

  auto* pair = app.add_subcommand("pair", "pairings of lattice elements");
  {
    auto kind = std::make_shared<std::string>();
    auto ring = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto e = std::make_shared<std::string>();
    auto f = std::make_shared<std::string>();
    pair->add_option("--kind", *kind, "hres, can, or mukai")
        ->required()
        ->check(CLI::IsMember({"hres", "can", "mukai"}));
    pair->add_option("--ring", *ring, "builtin:<name> or a path")->required();
    pair->add_option("--a", *a, "lattice element document (hres/can)");
    pair->add_option("--b", *b, "lattice element document (hres/can)");
    pair->add_option("--e", *e, "bundle spec (mukai)");
    pair->add_option("--f", *f, "bundle spec (mukai)");
    pair->callback([kind, ring, a, b, e, f] {
      RingPtr r = resolve_ring(*ring);
      if (*kind == "mukai") {
        if (e->empty() || f->empty())
          fail("ParseError", "mukai needs --e and --f bundle specs");
        TauScalar v =
            mukai_pairing(bundle_from_spec(r, *e), bundle_from_spec(r, *f));
        std::cout << "mukai = " << v.str() << "\n";
        return;
      }
      if (a->empty() || b->empty())
        fail("ParseError", *kind + " needs --a and --b element documents");
      HPElement xa = hp_from_json(r, load_json_file(*a));
      HPElement xb = hp_from_json(r, load_json_file(*b));
      PairingValue v =
          *kind == "hres" ? higher_residue(xa, xb) : canonical_pairing(xa, xb);
      std::cout << *kind << " = " << v.str("u") << "\n";
    });
  }

  auto* hrr = app.add_subcommand("hrr", "Euler pairing via both routes");
  {
    auto ring = std::make_shared<std::string>();
    auto e = std::make_shared<std::string>();
    auto f = std::make_shared<std::string>();
    hrr->add_option("--ring", *ring, "builtin:<name> or a path")->required();
    hrr->add_option("--e", *e, "bundle spec")->required();
    hrr->add_option("--f", *f, "bundle spec")->required();
    hrr->callback([ring, e, f] {
      RingPtr r = resolve_ring(*ring);
      TauScalar chi =
          hrr_chi(bundle_from_spec(r, *e), bundle_from_spec(r, *f));
      std::cout << "chi = " << chi.str() << "\n";
    });
  }

  auto* symmetry =
      app.add_subcommand("symmetry", "residue pairing symmetry defect");
  {
    auto ring = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    symmetry->add_option("--ring", *ring, "builtin:<name> or a path")
        ->required();
    symmetry->add_option("--a", *a, "lattice element document")->required();
    symmetry->add_option("--b", *b, "lattice element document")->required();
    symmetry->callback([ring, a, b] {
      RingPtr r = resolve_ring(*ring);
      PairingValue d = symmetry_defect(hp_from_json(r, load_json_file(*a)),
                                       hp_from_json(r, load_json_file(*b)));
      std::cout << "defect = " << d.str("u") << "\n";
    });
  }

  auto* family_cmd = app.add_subcommand("family", "deformation families");
  family_cmd->require_subcommand(1);
  auto* family_check = family_cmd->add_subcommand(
      "check", "Maurer-Cartan, transversality, and flatness reports");
  {
    auto path = std::make_shared<std::string>();
    family_check->add_option("--family", *path, "family spec document")
        ->required();
    family_check->callback([path] {
      DeformationSpec d = load_family(*path);
      bool mc = mc_check(d);
      std::cout << "mc_check: " << (mc ? "pass" : "fail") << "\n";
      std::vector<FamilySection> corpus;
      for (int i = 0; i < static_cast<int>(d.ring()->size()); ++i)
        corpus.push_back(constant_section(d, d.ring()->basis_class(i), 1));
      ValidationReport trans = transversality_check(d, corpus);
      ValidationReport flat = flatness_check(d);
      std::cout << trans.str() << flat.str();
      if (!mc || !trans.ok() || !flat.ok()) g_status = 2;
    });
  }

  auto* graph_cmd = app.add_subcommand("graph", "configuration-space graphs");
  graph_cmd->require_subcommand(1);
  auto* weight = graph_cmd->add_subcommand(
      "weight", "Monte-Carlo weight estimate");
  {
    auto path = std::make_shared<std::string>();
    auto samples = std::make_shared<long long>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    weight->add_option("--graph", *path, "graph document")->required();
    weight->add_option("--samples", *samples, "sample budget")->required();
    weight->add_option("--seed", *seed, "RNG seed (default 0)");
    weight->callback([path, samples, seed] {
      WeightEstimate w = weight_estimate(load_graph(*path), *samples, *seed);
      std::cout << "mean = " << fmt12(w.mean) << "\n"
                << "std_error = " << fmt12(w.std_error) << "\n"
                << "samples = " << w.samples << "\n"
                << "seed = " << w.seed << "\n";
      if (!w.forced.empty()) std::cout << "forced = " << w.forced << "\n";
    });
  }
  auto* enum_cmd = graph_cmd->add_subcommand(
      "enum", "canonical enumeration, one graph document per line");
  {
    auto k = std::make_shared<int>(0);
    auto m = std::make_shared<int>(0);
    auto max_edges = std::make_shared<int>(0);
    auto family = std::make_shared<std::string>("disk");
    auto cap = std::make_shared<long long>(200000);
    enum_cmd->add_option("--k", *k, "aerial vertex count")->required();
    enum_cmd->add_option("--m", *m, "boundary vertex count")->required();
    enum_cmd->add_option("--max-edges", *max_edges, "edge count limit")
        ->required();
    enum_cmd->add_option("--family", *family, "disk or cfw_constrained")
        ->check(CLI::IsMember({"disk", "cfw_constrained"}));
    enum_cmd->add_option("--cap", *cap, "enumeration count cap");
    enum_cmd->callback([k, m, max_edges, family, cap] {
      GraphFamily fam = *family == "disk" ? GraphFamily::disk
                                          : GraphFamily::cfw_constrained;
      for (const AdmissibleGraph& g :
           enumerate_admissible(*k, *m, *max_edges, fam, *cap))
        std::cout << graph_to_json(g).dump() << "\n";
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for commutative nc-Hodge structures"};
  app.set_help_all_flag("--help-all", "print help for every subcommand");
  setup(app);
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 64;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    if (err.kind == "RouteMismatch" || err.kind == "UHeadroomExhausted" ||
        err.kind == "BudgetExceeded")
      return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return g_status;
}
