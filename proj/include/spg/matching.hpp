#pragma once

#include <cstdint>
#include <optional>

#include "spg/graph.hpp"
#include "spg/limits.hpp"

namespace spg {

// A Subgraph whose edges are pairwise non-adjacent.
using Matching = Subgraph;

bool is_matching(const Subgraph& m);

// Maximum cardinality matching. Parallel edges never enlarge a matching, so the
// search runs on the underlying simple graph and each matched pair is reported
// through its lowest-index edge.
Matching maximum_matching(const Multigraph& g);
Matching maximum_matching(const Multigraph&& g) = delete;
int matching_number(const Multigraph& g);

struct PerfectMatchingResult {
  bool perfect = false;
  Matching matching;
  // Set S with o(G-S) > |S| when no perfect matching exists.
  std::optional<VertexSet> tutte_violator;
};

PerfectMatchingResult has_perfect_matching(const Multigraph& g);
PerfectMatchingResult has_perfect_matching(const Multigraph&& g) = delete;

// Gallai-Edmonds set A(G): neighbours of the vertices missed by some maximum
// matching that are not missed themselves. Attains the Tutte-Berge maximum.
VertexSet gallai_edmonds_barrier(const Multigraph& g);

struct TutteBergeResult {
  int deficiency = 0;
  VertexSet attaining_set;
};

// max over all S of o(G-S) - |S|, by enumeration of every subset S.
TutteBergeResult tutte_berge_deficiency(const Multigraph& g, const SearchLimits& limits = {});

// o(G-S) for S given as a bitmask over the first 64 vertices.
int odd_components_without(const Multigraph& g, std::uint64_t removed);

}  // namespace spg
