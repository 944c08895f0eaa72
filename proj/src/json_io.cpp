#include "nchodge/json_io.hpp"

#include "nchodge/builtin_rings.hpp"
#include "nchodge/errors.hpp"
#include "nchodge/rational.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nchodge {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
  fail("ParseError", message);
}

int require_int(const json& doc, const std::string& where) {
  if (!doc.is_number_integer())
    bad(where + " must be an integer");
  return doc.get<int>();
}

std::string require_string(const json& doc, const std::string& where) {
  if (!doc.is_string()) bad(where + " must be a string");
  return doc.get<std::string>();
}

const json& require_key(const json& doc, const std::string& key,
                        const std::string& where) {
  if (!doc.is_object()) bad(where + " must be an object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(where + " is missing '" + key + "'");
  return *it;
}

Rational rational_from_json(const json& doc, const std::string& where) {
  if (doc.is_string()) return parse_rational(doc.get<std::string>());
  if (doc.is_number_integer()) return Rational(doc.get<long long>());
  bad(where + " must be an integer or a \"p/q\" string");
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) bad("'" + path + "' is not valid JSON");
  return doc;
}

void save_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) fail("ValidationError", "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

nlohmann::json tau_to_json(const TauScalar& s) {
  json out = json::array();
  for (const auto& [exp, coeff] : s.terms())
    out.push_back({{"tau_exp", exp}, {"coeff", render_rational(coeff)}});
  return out;
}

TauScalar tau_from_json(const nlohmann::json& doc) {
  if (doc.is_string() || doc.is_number_integer())
    return TauScalar(rational_from_json(doc, "scalar"));
  if (!doc.is_array()) bad("scalar must be a list of tau terms");
  TauScalar s;
  for (const auto& term : doc) {
    int exp = require_int(require_key(term, "tau_exp", "tau term"),
                          "tau_exp");
    s += TauScalar::tau_power(
        exp, rational_from_json(require_key(term, "coeff", "tau term"),
                                "tau coefficient"));
  }
  return s;
}

nlohmann::json class_to_json(const CohClass& cls) {
  json out = json::array();
  for (const auto& [i, c] : cls.coeffs())
    out.push_back({{"label", cls.ring()->basis_element(i).label},
                   {"coeff", tau_to_json(c)}});
  return out;
}

CohClass class_from_json(const RingPtr& ring, const nlohmann::json& doc) {
  if (!doc.is_array()) bad("class must be a list of terms");
  std::map<int, TauScalar> coeffs;
  for (const auto& term : doc) {
    std::string label =
        require_string(require_key(term, "label", "class term"), "label");
    auto idx = ring->index_of(label);
    if (!idx) bad("unknown basis label '" + label + "'");
    if (coeffs.count(*idx)) bad("duplicate class term '" + label + "'");
    coeffs[*idx] = tau_from_json(require_key(term, "coeff", "class term"));
  }
  return CohClass(ring, std::move(coeffs));
}

nlohmann::json ring_to_json(const RingPtr& ring) {
  const auto& r = *ring;
  json doc;
  doc["dimension"] = r.dimension();
  json basis = json::array();
  for (const auto& b : r.basis())
    basis.push_back({{"label", b.label}, {"p", b.p}, {"q", b.q}});
  doc["basis"] = std::move(basis);
  if (r.top_index() >= 0)
    doc["top"] = r.basis_element(r.top_index()).label;

  int unit = r.unit_index();
  json products = json::array();
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) {
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      if (ii == unit || jj == unit) continue;
      const auto* terms = r.product(ii, jj);
      if (!terms || terms->empty()) continue;
      json result = json::array();
      for (const auto& [t, c] : *terms)
        result.push_back(
            {{"label", r.basis_element(t).label}, {"coeff", tau_to_json(c)}});
      products.push_back({{"left", r.basis_element(ii).label},
                          {"right", r.basis_element(jj).label},
                          {"result", std::move(result)}});
    }
  doc["products"] = std::move(products);

  if (r.has_unavailable_products()) {
    json unavailable = json::array();
    for (size_t i = 0; i < r.size(); ++i)
      for (size_t j = 0; j < r.size(); ++j)
        if (r.product_unavailable(static_cast<int>(i), static_cast<int>(j)))
          unavailable.push_back({r.basis_element(static_cast<int>(i)).label,
                                 r.basis_element(static_cast<int>(j)).label});
    doc["unavailable"] = std::move(unavailable);
  }

  if (r.has_tangent_data()) {
    json tangent = json::array();
    for (int k = 1; k <= r.dimension(); ++k) {
      auto ck = r.tangent_chern(k);
      if (ck.is_zero()) continue;
      tangent.push_back({{"k", k}, {"class", class_to_json(ck)}});
    }
    doc["tangent_chern"] = std::move(tangent);
  }
  return doc;
}

RingPtr ring_from_json(const nlohmann::json& doc) {
  int n = require_int(require_key(doc, "dimension", "ring"), "dimension");
  if (n < 0) bad("dimension must be nonnegative");
  const json& basis = require_key(doc, "basis", "ring");
  if (!basis.is_array() || basis.empty())
    bad("basis must be a nonempty list");

  RingBuilder builder(n);
  std::map<std::string, int> index;
  for (const auto& b : basis) {
    std::string label =
        require_string(require_key(b, "label", "basis entry"), "label");
    int p = require_int(require_key(b, "p", "basis entry"), "p");
    int q = require_int(require_key(b, "q", "basis entry"), "q");
    int idx = builder.add_basis(label, p, q);
    if (!index.emplace(label, idx).second)
      bad("duplicate basis label '" + label + "'");
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) bad("unknown basis label '" + label + "'");
    return it->second;
  };

  if (doc.contains("top")) {
    std::string top = require_string(doc.at("top"), "top");
    lookup(top);
    builder.set_top(top);
  }

  if (doc.contains("products")) {
    const json& products = doc.at("products");
    if (!products.is_array()) bad("products must be a list");
    std::set<std::pair<int, int>> seen;
    for (const auto& entry : products) {
      int left = lookup(
          require_string(require_key(entry, "left", "product"), "left"));
      int right = lookup(
          require_string(require_key(entry, "right", "product"), "right"));
      if (!seen.insert({left, right}).second)
        bad("duplicate product entry");
      const json& result = require_key(entry, "result", "product");
      if (!result.is_array()) bad("product result must be a list");
      CohRing::ProductTerms terms;
      for (const auto& term : result) {
        int t = lookup(
            require_string(require_key(term, "label", "product term"),
                           "label"));
        terms.emplace_back(
            t, tau_from_json(require_key(term, "coeff", "product term")));
      }
      builder.set_product(left, right, std::move(terms));
    }
  }

  if (doc.contains("unavailable")) {
    const json& unavailable = doc.at("unavailable");
    if (!unavailable.is_array()) bad("unavailable must be a list");
    for (const auto& pair : unavailable) {
      if (!pair.is_array() || pair.size() != 2)
        bad("unavailable entries must be [left, right] pairs");
      builder.set_unavailable(lookup(require_string(pair[0], "left")),
                              lookup(require_string(pair[1], "right")));
    }
  }

  if (doc.contains("tangent_chern")) {
    const json& tangent = doc.at("tangent_chern");
    if (!tangent.is_array()) bad("tangent_chern must be a list");
    std::vector<std::map<int, TauScalar>> chern(std::max(n, 1));
    for (const auto& entry : tangent) {
      int k = require_int(require_key(entry, "k", "tangent entry"), "k");
      if (k < 1 || k > n) bad("tangent degree k out of range");
      const json& cls = require_key(entry, "class", "tangent entry");
      if (!cls.is_array()) bad("tangent class must be a list");
      std::map<int, TauScalar> ck;
      for (const auto& term : cls) {
        int t = lookup(
            require_string(require_key(term, "label", "tangent term"),
                           "label"));
        if (ck.count(t)) bad("duplicate tangent term");
        ck[t] = tau_from_json(require_key(term, "coeff", "tangent term"));
      }
      chern[k - 1] = std::move(ck);
    }
    builder.set_tangent(std::move(chern));
  }

  return builder.build();
}

nlohmann::json bundle_to_json(const BundleData& bundle) {
  json doc;
  doc["rank"] = bundle.rank;
  json chern = json::array();
  for (size_t k = 0; k < bundle.chern.size(); ++k) {
    if (bundle.chern[k].is_zero()) continue;
    chern.push_back({{"k", static_cast<int>(k) + 1},
                     {"class", class_to_json(bundle.chern[k])}});
  }
  doc["chern"] = std::move(chern);
  return doc;
}

BundleData bundle_from_json(const RingPtr& ring, const nlohmann::json& doc) {
  long rank = require_int(require_key(doc, "rank", "bundle"), "rank");
  std::vector<CohClass> chern(ring->dimension(), ring->zero_class());
  if (doc.contains("chern")) {
    const json& entries = doc.at("chern");
    if (!entries.is_array()) bad("chern must be a list");
    for (const auto& entry : entries) {
      int k = require_int(require_key(entry, "k", "chern entry"), "k");
      if (k < 1 || k > ring->dimension())
        bad("Chern degree k out of range");
      chern[k - 1] =
          class_from_json(ring, require_key(entry, "class", "chern entry"));
    }
  }
  return make_bundle(ring, rank, std::move(chern));
}

RingPtr load_ring(const std::string& path) {
  return ring_from_json(load_json_file(path));
}

void save_ring(const std::string& path, const RingPtr& ring) {
  save_json_file(path, ring_to_json(ring));
}

nlohmann::json hp_to_json(const HPElement& x) {
  json doc;
  doc["u_order"] = x.u_order();
  json components = json::array();
  for (int idx : x.support()) {
    json coeffs = json::array();
    for (int u = 0; u <= x.u_order(); ++u)
      coeffs.push_back(tau_to_json(x.coeff(idx, u)));
    components.push_back(
        {{"label", x.ring()->basis_element(idx).label},
         {"u_coeffs", std::move(coeffs)}});
  }
  doc["components"] = std::move(components);
  return doc;
}

HPElement hp_from_json(const RingPtr& ring, const nlohmann::json& doc) {
  int u_order =
      require_int(require_key(doc, "u_order", "lattice element"), "u_order");
  if (u_order < 0) bad("u_order must be >= 0");
  HPElement x(ring, u_order);
  const json& components =
      require_key(doc, "components", "lattice element");
  if (!components.is_array()) bad("components must be a list");
  std::set<std::string> seen;
  for (const auto& entry : components) {
    std::string label =
        require_string(require_key(entry, "label", "component"), "label");
    if (!seen.insert(label).second)
      bad("duplicate component label '" + label + "'");
    auto idx = ring->index_of(label);
    if (!idx) bad("unknown basis label '" + label + "'");
    const json& coeffs = require_key(entry, "u_coeffs", "component");
    if (!coeffs.is_array()) bad("u_coeffs must be a list");
    if (static_cast<int>(coeffs.size()) > u_order + 1)
      bad("u_coeffs for '" + label + "' overruns u_order");
    for (size_t u = 0; u < coeffs.size(); ++u)
      x.set_coeff(*idx, static_cast<int>(u), tau_from_json(coeffs[u]));
  }
  return x;
}

nlohmann::json family_to_json(const DeformationSpec& d) {
  json doc;
  doc["ring"] = ring_to_json(d.ring());
  doc["mu"] = d.mu();
  doc["t_order"] = d.t_order();
  doc["u_headroom"] = d.u_headroom();
  auto one_direction = [&](int j) {
    json list = json::array();
    for (const auto& [i, v] : d.kappa(j))
      list.push_back({{"on", d.ring()->basis_element(i).label},
                      {"value", class_to_json(v)}});
    return list;
  };
  if (d.mu() == 1) {
    doc["kappa"] = one_direction(0);
  } else {
    json blocks = json::array();
    for (int j = 0; j < d.mu(); ++j) blocks.push_back(one_direction(j));
    doc["kappa"] = std::move(blocks);
  }
  return doc;
}

DeformationSpec family_from_json(const nlohmann::json& doc) {
  const json& rdoc = require_key(doc, "ring", "family spec");
  RingPtr ring = rdoc.is_string() ? builtin::by_uri(rdoc.get<std::string>())
                                  : ring_from_json(rdoc);
  int mu = require_int(require_key(doc, "mu", "family spec"), "mu");
  if (mu < 1) bad("mu must be >= 1");
  int t_order =
      require_int(require_key(doc, "t_order", "family spec"), "t_order");
  int u_headroom =
      doc.contains("u_headroom")
          ? require_int(doc.at("u_headroom"), "u_headroom")
          : 1;

  auto one_direction = [&](const json& list) {
    if (!list.is_array())
      bad("a kappa direction must be a list of {on, value} entries");
    std::map<int, CohClass> k;
    for (const auto& entry : list) {
      std::string on =
          require_string(require_key(entry, "on", "kappa entry"), "on");
      auto idx = ring->index_of(on);
      if (!idx) bad("kappa acts on unknown label '" + on + "'");
      if (k.count(*idx)) bad("duplicate kappa entry for '" + on + "'");
      k.emplace(*idx, class_from_json(
                          ring, require_key(entry, "value", "kappa entry")));
    }
    return k;
  };

  const json& kdoc = require_key(doc, "kappa", "family spec");
  if (!kdoc.is_array()) bad("kappa must be a list");
  std::vector<std::map<int, CohClass>> kappa;
  bool nested = !kdoc.empty() && kdoc.front().is_array();
  if (mu == 1 && !nested) {
    kappa.push_back(one_direction(kdoc));
  } else {
    if (static_cast<int>(kdoc.size()) != mu)
      bad("kappa must carry one block per direction");
    for (const auto& block : kdoc) kappa.push_back(one_direction(block));
  }
  return DeformationSpec(ring, std::move(kappa), t_order, u_headroom);
}

DeformationSpec load_family(const std::string& path) {
  return family_from_json(load_json_file(path));
}

BundleData bundle_from_spec(const RingPtr& ring, const std::string& spec) {
  if (!spec.empty() && spec[0] == '@')
    return bundle_from_json(ring, load_json_file(spec.substr(1)));
  if (spec == "O") return line_bundle(ring->zero_class());
  if (spec.size() >= 4 && spec.rfind("O(", 0) == 0 && spec.back() == ')') {
    long long a = 0;
    size_t used = 0;
    std::string body = spec.substr(2, spec.size() - 3);
    try {
      a = std::stoll(body, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != body.size() || body.empty())
      bad("O(a) needs an integer twist, got '" + body + "'");
    for (int i = 0; i < static_cast<int>(ring->size()); ++i) {
      const BasisElement& b = ring->basis_element(i);
      if (b.p == 1 && b.q == 1)
        return line_bundle(CohClass(
            ring, std::map<int, TauScalar>{{i, TauScalar(Rational(a))}}));
    }
    bad("ring has no (1,1) basis element to twist by");
  }
  bad("bundle spec must be O, O(a), or @file.json, got '" + spec + "'");
}

nlohmann::json graph_to_json(const AdmissibleGraph& g) {
  json doc;
  doc["family"] =
      g.family == GraphFamily::disk ? "disk" : "cfw_constrained";
  doc["aerial"] = g.aerial;
  doc["boundary"] = g.boundary;
  json edges = json::array();
  for (const auto& [s, t] : g.edges) edges.push_back({s, t});
  doc["edges"] = std::move(edges);
  return doc;
}

AdmissibleGraph graph_from_json(const nlohmann::json& doc) {
  AdmissibleGraph g;
  std::string fam = require_string(require_key(doc, "family", "graph"),
                                   "family");
  if (fam == "disk") {
    g.family = GraphFamily::disk;
  } else if (fam == "cfw_constrained") {
    g.family = GraphFamily::cfw_constrained;
  } else {
    bad("unknown graph family '" + fam + "'");
  }
  g.aerial = require_int(require_key(doc, "aerial", "graph"), "aerial");
  g.boundary = require_int(require_key(doc, "boundary", "graph"), "boundary");
  const json& edges = require_key(doc, "edges", "graph");
  if (!edges.is_array()) bad("edges must be a list of [source, target] pairs");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2)
      bad("edges must be a list of [source, target] pairs");
    g.edges.emplace_back(require_int(e[0], "edge source"),
                         require_int(e[1], "edge target"));
  }
  validate_graph(g);
  return g;
}

AdmissibleGraph load_graph(const std::string& path) {
  return graph_from_json(load_json_file(path));
}

}  // namespace nchodge
