#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spg/graph.hpp"
#include "spg/limits.hpp"
#include "spg/sp.hpp"

namespace spg {

struct BoundRecord {
  std::string name;
  int value = 0;
  bool holds = false;  // sp <= value
  bool tight = false;  // sp == value
};

// Upper bounds on sp(G) next to its exact value. Bounds that do not apply to G
// (the non-regular ratio bound on regular graphs, the almost-regular bound when
// Delta - delta > 1) are omitted.
//   max_degree               Delta
//   degree_gap               Delta - delta + 2
//   matching_deficiency      |V| - 2 nu + 1
//   degree_ratio             1 + floor(Delta / delta)
//   degree_ratio_nonregular  ceil(Delta / delta)
//   almost_regular           2
struct BoundReport {
  int sp = 0;
  int max_degree = 0;
  int min_degree = 0;
  int matching_number = 0;
  std::vector<BoundRecord> bounds;

  bool all_hold() const;
  const BoundRecord* find(const std::string& name) const;
};

BoundReport bound_values(const Multigraph& g, const SearchLimits& limits = {});

// Vertex bipartition whose two induced subgraphs have maximum degree <= s and <= t.
// Every vertex starts on the s side; the lowest-index vertex over its side's
// bound moves across until none is. Each move lowers t*e(H) + s*e(L).
struct VertexPartition {
  VertexSet h_side;
  VertexSet l_side;
  int moves = 0;
  long long initial_potential = 0;
};

VertexPartition lovasz_partition(const Multigraph& g, int s, int t);

// Edge partition into spanning subgraphs H and L with d_H <= s and d_L <= t at
// every vertex. H is found as an integral flow in the bipartite double cover
// (every edge weighted s / (s + t - 1) is a fractional solution), and edges
// carried by one of their two copies are rounded along Euler circuits.
struct EdgePartition {
  Subgraph h;
  Subgraph l;
};

EdgePartition lovasz_edge_partition(const Multigraph& g, int s, int t);
EdgePartition lovasz_edge_partition(const Multigraph&& g, int s, int t) = delete;

// [1, Delta - delta + 2]-factor: the H part of the edge partition with
// s = Delta - delta + 2, t = delta - 1, where d_L <= delta - 1 forces d_H >= 1.
// For delta = 1 the graph itself is returned as a [1, Delta]-factor and
// `fallback` is set.
struct PartitionFactor {
  FactorWitness factor;
  bool fallback = false;
};

PartitionFactor factor_from_partition(const Multigraph& g);
PartitionFactor factor_from_partition(const Multigraph&& g) = delete;

// sum_{i < a} (a - i) p_i(G - S) <= b |S| for every S, by enumeration of S.
struct FactorConditionResult {
  bool holds = true;
  std::optional<VertexSet> violator;
};

FactorConditionResult yu_liu_check(const Multigraph& g, int a, int b, const SearchLimits& limits = {});

// Looks for non-regular graphs with sp > Delta - delta + 1. Findings are only
// reported; nothing here is claimed to hold.
struct HuntReport {
  int tested = 0;
  int skipped = 0;  // regular graphs and graphs with isolated vertices
  std::vector<Multigraph> violators;
};

HuntReport hunt_nonregular_improvement(const std::vector<Multigraph>& family, std::size_t budget,
                                       const SearchLimits& limits = {});

}  // namespace spg
