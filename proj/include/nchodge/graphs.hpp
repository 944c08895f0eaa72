#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nchodge {

// Configuration-space graphs on the disk. Vertices are numbered with the
// aerial (interior) vertices first, 0..k-1, then the boundary vertices
// k..k+m-1. Edges are ordered directed pairs; the list order is data, since
// the weight is the integral of an ordered wedge of one-forms.
//
// Gauge conventions (fixed once, used by both families):
//   disk            vertex 0 pinned at the center; every other aerial vertex
//                   free in the open disk; all m boundary angles free,
//                   constrained to strict cyclic order 0 < phi_k < ... < 2pi.
//   cfw_constrained vertex 0 at the center, vertex 1 at (r, 0) with the
//                   radius r in [0,1] as a chart coordinate; the first
//                   boundary vertex pinned at angle 0 (the point 1), the
//                   remaining boundary angles free and strictly ordered.
//                   Needs at least 2 aerial vertices and 1 boundary vertex.
enum class GraphFamily { disk, cfw_constrained };

struct AdmissibleGraph {
  GraphFamily family = GraphFamily::disk;
  int aerial = 0;
  int boundary = 0;
  std::vector<std::pair<int, int>> edges;
};

// ValidationError unless: vertex indices in range, every edge source is
// aerial, counts meet the family minimums (disk k >= 1; cfw k >= 2, m >= 1).
// Self-loops and repeated edges are constructible; they force weight zero
// (vanishing_check) rather than failing here.
void validate_graph(const AdmissibleGraph& g);

AdmissibleGraph make_graph(GraphFamily family, int aerial, int boundary,
                           std::vector<std::pair<int, int>> edges);

// Dimension of the gauge-fixed configuration space: 2k + m - 2 for the disk
// family, 2k + m - 4 for the constrained one.
int config_dimension(const AdmissibleGraph& g);

// Structural zeroes, checked in this order:
//   self-loop               an edge (v, v); d theta is degenerate on it
//   doubled-edge            a repeated ordered pair; repeated one-form
//   dimension-mismatch      edge count differs from config_dimension
//   isolated-aerial-vertex  a coordinate-carrying aerial vertex (every
//                           aerial vertex except the pinned vertex 0) that
//                           touches no edge; its chart columns vanish
struct VanishingResult {
  bool forced = false;
  std::string reason;  // empty iff not forced
};

VanishingResult vanishing_check(const AdmissibleGraph& g);

// forced is the vanishing reason when the estimate is a structural zero; a
// forced zero consumes no samples at all (samples = 0, std_error = 0).
struct WeightEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::string forced;
};

// Monte-Carlo estimate of the weight: the integral over the gauge-fixed
// configuration space of the ordered wedge of hyperbolic-angle one-forms
// d theta_e, normalized by (2 pi)^{edges}. The propagator is
//   theta(a, b) = arg(b - a) - arg(1 - conj(a) b) - 2 arg(1 - a).
// Sampling is uniform per chart coordinate (aerial points uniform in the
// disk, boundary angles uniform on the circle with a strict-order
// indicator); the Jacobian of the angle forms against the chart is evaluated
// analytically at every sample. Sampling runs in fixed shards of 65536
// drawn from mt19937_64 streams seeded seed xor shard-index and reduced in
// shard order, so the result is bit-identical for a given (graph, samples,
// seed) no matter how shards are scheduled.
// Errors: SampleBudgetZero when samples <= 0 and the weight is not a
// structural zero.
WeightEstimate weight_estimate(const AdmissibleGraph& g, long long samples,
                               std::uint64_t seed);

// Complete duplicate-free enumeration of the graphs on k aerial and m
// boundary vertices with at most max_edges edges, as edge sets: the
// universe is every directed pair (s, t) with s aerial and t != s, and each
// subset appears exactly once, ordered by edge count and then
// lexicographically, with each edge list itself sorted. Graphs whose weight
// vanishes identically for list-independent reasons (self-loops, repeats)
// are therefore never produced. BudgetExceeded when the subset count would
// pass cap; ValidationError on counts below the family minimums.
std::vector<AdmissibleGraph> enumerate_admissible(
    int k, int m, int max_edges, GraphFamily family = GraphFamily::disk,
    long long cap = 200000);

}  // namespace nchodge
