#pragma once

#include <string>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

// Isomorphism-invariant code of a small multigraph: colour refinement followed by
// an exhaustive search over orderings inside each colour class. Intended for
// graphs with at most a dozen vertices.
struct CanonicalLabeling {
  std::string code;
  std::vector<Vertex> order;  // order[i] = vertex placed at canonical position i
};
CanonicalLabeling canonical_labeling(const Multigraph& g);
std::string canonical_form(const Multigraph& g);

// Graph with vertex order[i] renamed to i; edges re-emitted in lexicographic order.
Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& order);

// Centre-rooted AHU encoding of a free tree.
std::string tree_canonical_form(const Multigraph& tree);

// All pairwise non-isomorphic connected simple graphs on exactly n vertices.
std::vector<Multigraph> connected_simple_graphs(int n);

// Every non-isomorphic multigraph obtained from `simple` by giving each edge a
// multiplicity in [1, max_multiplicity] with at least one edge repeated and at
// most max_edges edges in total.
std::vector<Multigraph> multigraph_variants(const Multigraph& simple, int max_multiplicity, int max_edges);

// All pairwise non-isomorphic free trees on exactly n vertices.
std::vector<Multigraph> free_trees(int n);

}  // namespace spg
