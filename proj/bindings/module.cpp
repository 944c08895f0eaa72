#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nchodge/builtin_rings.hpp"
#include "nchodge/chern.hpp"
#include "nchodge/coh_ring.hpp"
#include "nchodge/errors.hpp"
#include "nchodge/family.hpp"
#include "nchodge/graphs.hpp"
#include "nchodge/hp_lattice.hpp"
#include "nchodge/json_io.hpp"
#include "nchodge/pairing.hpp"

#include <optional>
#include <string>

namespace py = pybind11;
using namespace nchodge;

namespace {

// Thin ring handle: the core passes shared_ptr<const CohRing> around, which
// pybind cannot use as a holder directly.
struct PyRing {
  RingPtr ptr;
};

GraphFamily family_from_name(const std::string& name) {
  if (name == "disk") return GraphFamily::disk;
  if (name == "cfw_constrained") return GraphFamily::cfw_constrained;
  fail("ParseError", "unknown graph family '" + name + "'");
}

std::string family_name(GraphFamily f) {
  return f == GraphFamily::disk ? "disk" : "cfw_constrained";
}

IntegrationMode mode_from_name(const std::string& name) {
  if (name == "algebraic") return IntegrationMode::algebraic;
  if (name == "analytic") return IntegrationMode::analytic;
  fail("ParseError", "unknown integration mode '" + name + "'");
}

TwistKind twist_from_name(const std::string& name) {
  if (name == "J") return TwistKind::J;
  if (name == "K") return TwistKind::K;
  fail("ParseError", "twist kind must be 'J' or 'K'");
}

std::vector<FamilySection> basis_corpus(const DeformationSpec& d,
                                        int u_order) {
  std::vector<FamilySection> corpus;
  for (int i = 0; i < static_cast<int>(d.ring()->size()); ++i)
    corpus.push_back(constant_section(d, d.ring()->basis_class(i), u_order));
  return corpus;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computer algebra for commutative nc-Hodge structures";

  py::register_exception<Error>(m, "Error");

  py::class_<TauScalar>(m, "TauScalar")
      .def(py::init<>())
      .def(py::init([](long long n) { return TauScalar(Rational(n)); }))
      .def_static("tau_power",
                  [](int e, long long c) {
                    return TauScalar::tau_power(e, Rational(c));
                  })
      .def("is_zero", &TauScalar::is_zero)
      .def("is_rational", &TauScalar::is_rational)
      .def("str", &TauScalar::str)
      .def("__str__", &TauScalar::str)
      .def("__repr__", &TauScalar::str)
      .def("__eq__",
           [](const TauScalar& a, const TauScalar& b) { return a == b; })
      .def("__add__",
           [](const TauScalar& a, const TauScalar& b) { return a + b; })
      .def("__sub__",
           [](const TauScalar& a, const TauScalar& b) { return a - b; })
      .def("__mul__",
           [](const TauScalar& a, const TauScalar& b) { return a * b; })
      .def("__neg__", [](const TauScalar& a) { return -a; });

  py::class_<CharSeries>(m, "CharSeries")
      .def("order", &CharSeries::order)
      .def("coeff", &CharSeries::coeff)
      .def("is_zero", &CharSeries::is_zero)
      .def("str", &CharSeries::str, py::arg("var") = "z")
      .def("__str__", [](const CharSeries& s) { return s.str(); });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def("ok", &ValidationReport::ok)
      .def("first_failure", &ValidationReport::first_failure)
      .def("str", &ValidationReport::str)
      .def("__str__", &ValidationReport::str);

  py::class_<PyRing>(m, "Ring")
      .def("size", [](const PyRing& r) { return r.ptr->size(); })
      .def("dimension", [](const PyRing& r) { return r.ptr->dimension(); })
      .def("labels",
           [](const PyRing& r) {
             std::vector<std::string> out;
             for (int i = 0; i < static_cast<int>(r.ptr->size()); ++i)
               out.push_back(r.ptr->basis_element(i).label);
             return out;
           })
      .def("one", [](const PyRing& r) { return r.ptr->one(); })
      .def("zero", [](const PyRing& r) { return r.ptr->zero_class(); })
      .def("basis", [](const PyRing& r, const std::string& label) {
        auto idx = r.ptr->index_of(label);
        if (!idx) fail("ParseError", "unknown basis label '" + label + "'");
        return r.ptr->basis_class(*idx);
      });

  py::class_<CohClass>(m, "CohClass")
      .def("is_zero", &CohClass::is_zero)
      .def("component", &CohClass::component)
      .def("str", &CohClass::str)
      .def("__str__", &CohClass::str)
      .def("__eq__",
           [](const CohClass& a, const CohClass& b) { return a == b; })
      .def("__add__",
           [](const CohClass& a, const CohClass& b) { return a + b; })
      .def("__sub__",
           [](const CohClass& a, const CohClass& b) { return a - b; })
      .def("__neg__", [](const CohClass& a) { return -a; });

  py::class_<BundleData>(m, "Bundle")
      .def_property_readonly("rank",
                             [](const BundleData& b) { return b.rank; });

  py::class_<HPElement>(m, "HPElement")
      .def("u_order", &HPElement::u_order)
      .def("is_zero", &HPElement::is_zero)
      .def("slice", &HPElement::slice)
      .def("__eq__",
           [](const HPElement& a, const HPElement& b) { return a == b; });

  py::class_<DeformationSpec>(m, "DeformationSpec")
      .def_property_readonly("mu", &DeformationSpec::mu)
      .def_property_readonly("t_order", &DeformationSpec::t_order)
      .def("ring",
           [](const DeformationSpec& d) { return PyRing{d.ring()}; });

  py::class_<FamilySection>(m, "FamilySection")
      .def("is_zero", &FamilySection::is_zero)
      .def("u_valuation", [](const FamilySection& s) -> std::optional<int> {
        return s.u_valuation();
      });

  py::class_<AdmissibleGraph>(m, "AdmissibleGraph")
      .def_property_readonly(
          "family",
          [](const AdmissibleGraph& g) { return family_name(g.family); })
      .def_readonly("aerial", &AdmissibleGraph::aerial)
      .def_readonly("boundary", &AdmissibleGraph::boundary)
      .def_readonly("edges", &AdmissibleGraph::edges);

  py::class_<WeightEstimate>(m, "WeightEstimate")
      .def_readonly("mean", &WeightEstimate::mean)
      .def_readonly("std_error", &WeightEstimate::std_error)
      .def_readonly("samples", &WeightEstimate::samples)
      .def_readonly("seed", &WeightEstimate::seed)
      .def_readonly("forced", &WeightEstimate::forced);

  // Rings.
  m.def("builtin_ring", [](const std::string& uri) {
    std::string full = uri.rfind("builtin:", 0) == 0 ? uri : "builtin:" + uri;
    return PyRing{builtin::by_uri(full)};
  });
  m.def("load_ring",
        [](const std::string& path) { return PyRing{load_ring(path)}; });
  m.def("formal_cy",
        [](int n, const std::map<std::pair<int, int>, int>& diamond) {
          return PyRing{builtin::formal_cy(n, diamond)};
        });
  m.def("product_ring", [](const PyRing& a, const PyRing& b) {
    return PyRing{builtin::product_ring(a.ptr, b.ptr)};
  });
  m.def("validate_ring",
        [](const PyRing& r) { return validate_ring(r.ptr); });
  m.def("cup", &cup);
  m.def("integrate",
        [](const CohClass& a, const std::string& mode) {
          return integrate(a, mode_from_name(mode));
        },
        py::arg("cls"), py::arg("mode") = "algebraic");

  // Characteristic classes.
  m.def("todd_series", &todd_series);
  m.def("modified_todd_series", &modified_todd_series);
  m.def("todd_class",
        [](const PyRing& r) { return todd_class(r.ptr); });
  m.def("modified_todd_class",
        [](const PyRing& r) { return modified_todd_class(r.ptr); });
  m.def("sqrt_todd", [](const PyRing& r) { return sqrt_todd(r.ptr); });
  m.def("bundle", [](const PyRing& r, const std::string& spec) {
    return bundle_from_spec(r.ptr, spec);
  });
  m.def("chern_character", &chern_character);

  // Lattice model and pairings.
  m.def("hkr_embed", &hkr_embed, py::arg("cls"), py::arg("u_order") = 0);
  m.def("u_mul", &u_mul, py::arg("x"), py::arg("k") = 1);
  m.def("twist", [](const HPElement& x, const std::string& kind) {
    return twist(x, twist_from_name(kind));
  });
  m.def("untwist", [](const HPElement& x, const std::string& kind) {
    return untwist(x, twist_from_name(kind));
  });
  m.def("vee", &vee);
  m.def("rational_check", &rational_check);
  m.def("u_valuation", [](const HPElement& x) -> std::optional<int> {
    return u_valuation(x);
  });
  m.def("higher_residue", &higher_residue);
  m.def("canonical_pairing", &canonical_pairing);
  m.def("mukai_pairing", &mukai_pairing);
  m.def("hrr_chi", &hrr_chi);
  m.def("symmetry_defect", &symmetry_defect);

  // Families.
  m.def("load_family", &load_family);
  m.def("mc_check", &mc_check);
  m.def("constant_section",
        [](const DeformationSpec& d, const CohClass& a, int u_order) {
          return constant_section(d, a, u_order);
        },
        py::arg("spec"), py::arg("cls"), py::arg("u_order") = 1);
  m.def("connect", &connect);
  m.def("transversality_check",
        [](const DeformationSpec& d) {
          return transversality_check(d, basis_corpus(d, 1));
        });
  m.def("flatness_check", &flatness_check);
  m.def("intertwining_defect",
        [](const CohClass& t, const FamilySection& s, int j,
           const DeformationSpec& d) {
          return intertwining_defect(t, s, j, d);
        });

  // Graphs.
  m.def("make_graph",
        [](const std::string& family, int aerial, int boundary,
           std::vector<std::pair<int, int>> edges) {
          return make_graph(family_from_name(family), aerial, boundary,
                            std::move(edges));
        });
  m.def("load_graph", &load_graph);
  m.def("config_dimension", &config_dimension);
  m.def("vanishing_check", [](const AdmissibleGraph& g) {
    VanishingResult v = vanishing_check(g);
    return py::make_tuple(v.forced, v.reason);
  });
  m.def("weight_estimate", &weight_estimate, py::arg("graph"),
        py::arg("samples"), py::arg("seed") = 0);
  m.def("enumerate_admissible",
        [](int k, int mm, int max_edges, const std::string& family,
           long long cap) {
          return enumerate_admissible(k, mm, max_edges,
                                      family_from_name(family), cap);
        },
        py::arg("k"), py::arg("m"), py::arg("max_edges"),
        py::arg("family") = "disk", py::arg("cap") = 200000);
}
