#include "nchodge/graphs.hpp"

#include "nchodge/errors.hpp"
#include "nchodge/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>

namespace nchodge {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr long long kShard = 65536;

bool is_cfw(const AdmissibleGraph& g) {
  return g.family == GraphFamily::cfw_constrained;
}

// Chart columns in canonical order: the cfw radius, then (x, y) per free
// aerial vertex by index, then the free boundary angles by index.
struct Column {
  enum Kind { cfw_r, aerial_x, aerial_y, boundary_phi } kind;
  int vertex;
};

std::vector<Column> chart_columns(const AdmissibleGraph& g) {
  std::vector<Column> cols;
  int first_free_aerial = 1;
  if (is_cfw(g)) {
    cols.push_back({Column::cfw_r, 1});
    first_free_aerial = 2;
  }
  for (int v = first_free_aerial; v < g.aerial; ++v) {
    cols.push_back({Column::aerial_x, v});
    cols.push_back({Column::aerial_y, v});
  }
  int first_free_boundary = is_cfw(g) ? 1 : 0;
  for (int i = first_free_boundary; i < g.boundary; ++i)
    cols.push_back({Column::boundary_phi, g.aerial + i});
  return cols;
}

// Partial derivatives of theta(a, b) = arg(b-a) - arg(1 - conj(a) b)
// - 2 arg(1 - a) in the source/target coordinates. w2 = 1 - conj(a) b never
// vanishes (the source is interior) and b != a is guarded by the caller.
double d_source_x(cplx a, cplx b) {
  cplx inv_ba = 1.0 / (b - a), w2 = 1.0 - std::conj(a) * b;
  return -inv_ba.imag() + (b / w2).imag() + 2.0 * (1.0 / (1.0 - a)).imag();
}
double d_source_y(cplx a, cplx b) {
  cplx inv_ba = 1.0 / (b - a), w2 = 1.0 - std::conj(a) * b;
  return -inv_ba.real() - (b / w2).real() + 2.0 * (1.0 / (1.0 - a)).real();
}
double d_target_x(cplx a, cplx b) {
  cplx inv_ba = 1.0 / (b - a), w2 = 1.0 - std::conj(a) * b;
  return inv_ba.imag() + (std::conj(a) / w2).imag();
}
double d_target_y(cplx a, cplx b) {
  cplx inv_ba = 1.0 / (b - a), w2 = 1.0 - std::conj(a) * b;
  return inv_ba.real() + (std::conj(a) / w2).real();
}
double d_target_phi(cplx a, cplx b) {
  cplx w2 = 1.0 - std::conj(a) * b;
  return (b / (b - a)).real() + (std::conj(a) * b / w2).real();
}

double jac_entry(const Column& c, int src, int dst, cplx a, cplx b) {
  switch (c.kind) {
    case Column::cfw_r:
    case Column::aerial_x:
      if (src == c.vertex) return d_source_x(a, b);
      if (dst == c.vertex) return d_target_x(a, b);
      return 0.0;
    case Column::aerial_y:
      if (src == c.vertex) return d_source_y(a, b);
      if (dst == c.vertex) return d_target_y(a, b);
      return 0.0;
    case Column::boundary_phi:
      return (dst == c.vertex) ? d_target_phi(a, b) : 0.0;
  }
  return 0.0;
}

double det_inplace(std::vector<double>& m, int n) {
  double det = 1.0;
  for (int i = 0; i < n; ++i) {
    int piv = i;
    for (int r = i + 1; r < n; ++r)
      if (std::fabs(m[r * n + i]) > std::fabs(m[piv * n + i])) piv = r;
    if (std::fabs(m[piv * n + i]) < 1e-300) return 0.0;
    if (piv != i) {
      for (int c = i; c < n; ++c) std::swap(m[piv * n + c], m[i * n + c]);
      det = -det;
    }
    det *= m[i * n + i];
    for (int r = i + 1; r < n; ++r) {
      double f = m[r * n + i] / m[i * n + i];
      for (int c = i; c < n; ++c) m[r * n + c] -= f * m[i * n + c];
    }
  }
  return det;
}

// 53-bit uniform double in [0, 1).
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Sampler {
  const AdmissibleGraph& g;
  std::vector<Column> cols;
  int dim;
  double chart_volume;  // box volume over the sampled coordinates
  std::vector<cplx> z;
  std::vector<double> jac;

  explicit Sampler(const AdmissibleGraph& graph)
      : g(graph), cols(chart_columns(graph)), dim(static_cast<int>(cols.size())) {
    z.resize(static_cast<size_t>(g.aerial + g.boundary));
    jac.resize(static_cast<size_t>(dim) * dim);
    int free_aerial = g.aerial - (is_cfw(g) ? 2 : 1);
    int free_boundary = g.boundary - (is_cfw(g) ? 1 : 0);
    chart_volume = std::pow(std::acos(-1.0), free_aerial) *
                   std::pow(kTwoPi, free_boundary) /
                   std::pow(kTwoPi, static_cast<int>(g.edges.size()));
  }

  // One chart draw; returns the integrand value (0 outside the ordered
  // boundary domain or at a coincident aerial pair, both measure zero).
  double draw(std::mt19937_64& rng) {
    z[0] = 0.0;
    int first_free_aerial = 1;
    if (is_cfw(g)) {
      z[1] = unit_double(rng);
      first_free_aerial = 2;
    }
    for (int v = first_free_aerial; v < g.aerial; ++v) {
      double u = unit_double(rng), psi = kTwoPi * unit_double(rng);
      z[static_cast<size_t>(v)] = std::polar(std::sqrt(u), psi);
    }
    bool ordered = true;
    double prev = 0.0;
    int first_free_boundary = 0;
    if (is_cfw(g)) {
      z[static_cast<size_t>(g.aerial)] = 1.0;
      first_free_boundary = 1;
    }
    for (int i = first_free_boundary; i < g.boundary; ++i) {
      double phi = kTwoPi * unit_double(rng);
      if (i > first_free_boundary && phi <= prev) ordered = false;
      prev = phi;
      z[static_cast<size_t>(g.aerial + i)] = std::polar(1.0, phi);
    }
    if (!ordered) return 0.0;

    int ne = static_cast<int>(g.edges.size());
    for (int e = 0; e < ne; ++e) {
      auto [s, t] = g.edges[static_cast<size_t>(e)];
      cplx a = z[static_cast<size_t>(s)], b = z[static_cast<size_t>(t)];
      if (std::norm(b - a) < 1e-24) return 0.0;
      for (int c = 0; c < dim; ++c)
        jac[static_cast<size_t>(e) * dim + c] =
            jac_entry(cols[static_cast<size_t>(c)], s, t, a, b);
    }
    return det_inplace(jac, ne) * chart_volume;
  }
};

}  // namespace

void validate_graph(const AdmissibleGraph& g) {
  int min_aerial = is_cfw(g) ? 2 : 1;
  if (g.aerial < min_aerial)
    fail("ValidationError", "the " +
                                std::string(is_cfw(g) ? "constrained" : "disk") +
                                " family needs at least " +
                                std::to_string(min_aerial) +
                                " aerial vertices");
  if (g.boundary < 0)
    fail("ValidationError", "boundary count must be nonnegative");
  if (is_cfw(g) && g.boundary < 1)
    fail("ValidationError",
         "the constrained family needs a boundary vertex to fix the ray");
  int n = g.aerial + g.boundary;
  for (const auto& [s, t] : g.edges) {
    if (s < 0 || s >= n || t < 0 || t >= n)
      fail("ValidationError", "edge (" + std::to_string(s) + "," +
                                  std::to_string(t) +
                                  ") leaves the vertex range");
    if (s >= g.aerial)
      fail("ValidationError", "edge (" + std::to_string(s) + "," +
                                  std::to_string(t) +
                                  ") starts at a boundary vertex");
  }
}

AdmissibleGraph make_graph(GraphFamily family, int aerial, int boundary,
                           std::vector<std::pair<int, int>> edges) {
  AdmissibleGraph g{family, aerial, boundary, std::move(edges)};
  validate_graph(g);
  return g;
}

int config_dimension(const AdmissibleGraph& g) {
  return 2 * g.aerial + g.boundary - (is_cfw(g) ? 4 : 2);
}

VanishingResult vanishing_check(const AdmissibleGraph& g) {
  validate_graph(g);
  for (const auto& [s, t] : g.edges)
    if (s == t) return {true, "self-loop"};
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges)
    if (!seen.insert(e).second) return {true, "doubled-edge"};
  if (static_cast<int>(g.edges.size()) != config_dimension(g))
    return {true, "dimension-mismatch"};
  std::vector<bool> touched(static_cast<size_t>(g.aerial), false);
  for (const auto& [s, t] : g.edges) {
    touched[static_cast<size_t>(s)] = true;
    if (t < g.aerial) touched[static_cast<size_t>(t)] = true;
  }
  for (int v = 1; v < g.aerial; ++v)
    if (!touched[static_cast<size_t>(v)])
      return {true, "isolated-aerial-vertex"};
  return {false, ""};
}

WeightEstimate weight_estimate(const AdmissibleGraph& g, long long samples,
                               std::uint64_t seed) {
  VanishingResult v = vanishing_check(g);
  if (v.forced) return {0.0, 0.0, 0, seed, v.reason};
  if (samples <= 0)
    fail("SampleBudgetZero",
         "a Monte-Carlo estimate needs a positive sample budget");

  Sampler sampler(g);
  long double total_sum = 0.0L, total_sq = 0.0L;
  long long done = 0;
  std::uint64_t shard = 0;
  while (done < samples) {
    long long take = std::min(kShard, samples - done);
    std::mt19937_64 rng(seed ^ shard);
    double sum = 0.0, sq = 0.0;
    for (long long i = 0; i < take; ++i) {
      double val = sampler.draw(rng);
      sum += val;
      sq += val * val;
    }
    total_sum += sum;
    total_sq += sq;
    done += take;
    ++shard;
  }

  WeightEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.mean = static_cast<double>(total_sum / samples);
  if (samples > 1) {
    long double var =
        (total_sq - total_sum * total_sum / samples) / (samples - 1);
    if (var < 0.0L) var = 0.0L;
    out.std_error = std::sqrt(static_cast<double>(var / samples));
  }
  return out;
}

std::vector<AdmissibleGraph> enumerate_admissible(int k, int m, int max_edges,
                                                  GraphFamily family,
                                                  long long cap) {
  AdmissibleGraph probe{family, k, m, {}};
  validate_graph(probe);
  if (max_edges < 0)
    fail("ValidationError", "max_edges must be nonnegative");

  std::vector<std::pair<int, int>> universe;
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k + m; ++t)
      if (t != s) universe.emplace_back(s, t);
  int usize = static_cast<int>(universe.size());
  int top = std::min(max_edges, usize);

  BigInt count = 0;
  for (int e = 0; e <= top; ++e) {
    BigInt c = 1;
    for (int i = 1; i <= e; ++i) {
      c *= usize - e + i;
      c /= i;
    }
    count += c;
  }
  if (count > cap)
    fail("BudgetExceeded", "enumeration would produce " + count.str() +
                               " graphs, above the cap of " +
                               std::to_string(cap));

  std::vector<AdmissibleGraph> out;
  out.reserve(static_cast<size_t>(count));
  for (int e = 0; e <= top; ++e) {
    std::vector<int> idx(static_cast<size_t>(e));
    for (int i = 0; i < e; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      AdmissibleGraph g{family, k, m, {}};
      g.edges.reserve(static_cast<size_t>(e));
      for (int i : idx) g.edges.push_back(universe[static_cast<size_t>(i)]);
      out.push_back(std::move(g));
      int pos = e - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == usize - e + pos)
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < e; ++i)
        idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
  return out;
}

}  // namespace nchodge
