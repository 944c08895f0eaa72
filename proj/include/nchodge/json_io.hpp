#pragma once

#include "nchodge/chern.hpp"
#include "nchodge/coh_ring.hpp"
#include "nchodge/family.hpp"
#include "nchodge/graphs.hpp"
#include "nchodge/hp_lattice.hpp"
#include "nchodge/tau_scalar.hpp"

#include <json.hpp>

#include <string>

namespace nchodge {

// All readers throw Error with kind ParseError on malformed input: bad JSON,
// wrong types, unknown labels, duplicate entries, non-integral numbers.
// Exact coefficients must be written as integers or "p/q" strings; floating
// point literals are rejected.

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& doc);

// Scalars serialize as [{"tau_exp": k, "coeff": "p/q"}, ...]. The reader also
// accepts a bare integer or rational string as shorthand for a tau^0 term.
nlohmann::json tau_to_json(const TauScalar& s);
TauScalar tau_from_json(const nlohmann::json& doc);

// Classes serialize as [{"label": ..., "coeff": ...}, ...] with tau-scalar
// coefficients; absent labels are zero.
nlohmann::json class_to_json(const CohClass& cls);
CohClass class_from_json(const RingPtr& ring, const nlohmann::json& doc);

// Ring document:
//   dimension     complex dimension n
//   basis         [{"label", "p", "q"}, ...]
//   top           label of the orientation class (optional; validation
//                 reports its absence)
//   products      [{"left", "right", "result": [{"label", "coeff"}]}, ...];
//                 pairs not listed multiply to zero, unit rows are implied
//   unavailable   [[left, right], ...] product pairs outside the model
//                 (optional)
//   tangent_chern [{"k", "class": [...]}, ...] (optional; when present the
//                 ring carries tangent data and unlisted degrees are zero)
nlohmann::json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const nlohmann::json& doc);

RingPtr load_ring(const std::string& path);
void save_ring(const std::string& path, const RingPtr& ring);

// Bundle document: {"rank": r, "chern": [{"k", "class": [...]}, ...]};
// unlisted degrees are zero.
nlohmann::json bundle_to_json(const BundleData& bundle);
BundleData bundle_from_json(const RingPtr& ring, const nlohmann::json& doc);

// Bundle mini-language: "O" is the trivial line bundle, "O(a)" twists by a
// times the ring's first basis element of bidegree (1,1), "@path" loads a
// bundle document. ParseError otherwise.
BundleData bundle_from_spec(const RingPtr& ring, const std::string& spec);

// Lattice element document:
//   {"u_order": N, "components": [{"label", "u_coeffs": [...]}, ...]}
// u_coeffs lists tau-scalar values for u^0..u^N; a shorter list reads as
// zero-padded, a longer one is rejected. Unlisted labels are zero.
nlohmann::json hp_to_json(const HPElement& x);
HPElement hp_from_json(const RingPtr& ring, const nlohmann::json& doc);

// Family spec document:
//   ring        a built-in name ("k3", "builtin:p2", ...) or an embedded
//               ring document
//   mu          parameter count
//   t_order     truncation order in t_1..t_mu
//   u_headroom  storage units below u^0 for sections (optional, default 1)
//   kappa       for mu = 1 a flat list of {"on": label, "value": [...]}
//               entries; for mu > 1 one such list per direction. Unlisted
//               labels map to zero; the bidegree shift and the Leibniz rule
//               are validated on load (ValidationError).
nlohmann::json family_to_json(const DeformationSpec& d);
DeformationSpec family_from_json(const nlohmann::json& doc);
DeformationSpec load_family(const std::string& path);

// Graph document:
//   {"family": "disk" | "cfw_constrained", "aerial": k, "boundary": m,
//    "edges": [[s, t], ...]}
// The loaded graph is validated (ValidationError on boundary-sourced edges
// or counts below the family minimums).
nlohmann::json graph_to_json(const AdmissibleGraph& g);
AdmissibleGraph graph_from_json(const nlohmann::json& doc);
AdmissibleGraph load_graph(const std::string& path);

}  // namespace nchodge
