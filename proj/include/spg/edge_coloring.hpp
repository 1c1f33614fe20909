#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spg/graph.hpp"
#include "spg/limits.hpp"

namespace spg {

// Colours 1..k on the edges of a subgraph. color_of is indexed by host edge id
// and holds 0 for edges outside the subgraph.
struct EdgeColoring {
  Subgraph subgraph;
  std::vector<int> color_of;
  int k = 0;

  int color(EdgeId e) const { return color_of[static_cast<std::size_t>(e)]; }
};

// Every subgraph edge coloured in 1..k, nothing else coloured, and no two edges
// sharing an endpoint with the same colour.
bool is_proper(const EdgeColoring& c);

int max_multiplicity(const Multigraph& g);

struct ChromaticIndexResult {
  int value = 0;
  EdgeColoring witness;
};

// Exact chromatic index; tries k = Delta, Delta + 1, ... and returns the first k
// admitting a colouring. Cap: SearchLimits::exact_edges.
ChromaticIndexResult chromatic_index(const Multigraph& g, const SearchLimits& limits = {});
ChromaticIndexResult chromatic_index(const Multigraph&& g, const SearchLimits& limits = {}) = delete;

std::optional<EdgeColoring> find_k_edge_coloring(const Subgraph& h, int k, const SearchLimits& limits = {});

// A maximum k-edge-colourable subgraph with a witness colouring. Among all
// maximum ones the lexicographically smallest edge-index set is returned.
EdgeColoring max_k_ecs(const Multigraph& g, int k, const SearchLimits& limits = {});
EdgeColoring max_k_ecs(const Multigraph&& g, int k, const SearchLimits& limits = {}) = delete;

// nu_k(G).
int max_k_ecs_size(const Multigraph& g, int k, const SearchLimits& limits = {});

// Every maximum k-edge-colourable edge set exactly once, in lexicographic order of
// the sorted edge-index sequence, each with one witness colouring. The visitor
// returns false to stop early. Cap: SearchLimits::enumerate_edges.
void enumerate_max_k_ecs(const Multigraph& g, int k, const std::function<bool(const EdgeColoring&)>& visit,
                         const SearchLimits& limits = {});
std::vector<EdgeColoring> enumerate_max_k_ecs(const Multigraph& g, int k, const SearchLimits& limits = {});
std::vector<EdgeColoring> enumerate_max_k_ecs(const Multigraph&& g, int k, const SearchLimits& limits = {}) = delete;

// First spanning maximum k-edge-colourable subgraph met while scanning the
// maximum ones, or nothing when every maximum one misses a vertex.
std::optional<EdgeColoring> find_spanning_max_k_ecs(const Multigraph& g, int k, const SearchLimits& limits = {});
std::optional<EdgeColoring> find_spanning_max_k_ecs(const Multigraph&& g, int k, const SearchLimits& limits = {}) = delete;

// Proper colouring of a forest with Delta(forest) colours.
EdgeColoring color_forest(const Subgraph& forest);

}  // namespace spg
