#pragma once

#include <optional>

#include "spg/edge_coloring.hpp"
#include "spg/graph.hpp"
#include "spg/limits.hpp"

namespace spg {

// Spanning subgraph with a <= d(v) <= b at every host vertex.
struct FactorWitness {
  Subgraph subgraph;
  int a = 1;
  int b = 1;
};

bool is_factor(const Subgraph& h, int a, int b);

// sp(G) from the perfect-matching and [1, b]-factor conditions: 1 when G has a perfect matching,
// otherwise max(2, max over non-empty S of ceil(p_0(G-S) / |S|)).
// Cap: SearchLimits::subset_vertices.
int sp_formula(const Multigraph& g, const SearchLimits& limits = {});

// A [1,k]-factor with as few edges as possible, if one exists.
std::optional<FactorWitness> find_one_k_factor(const Multigraph& g, int k, const SearchLimits& limits = {});
std::optional<FactorWitness> find_one_k_factor(const Multigraph&& g, int k, const SearchLimits& limits = {}) = delete;

// Least k admitting a [1,k]-factor, with the factor found for that k.
FactorWitness sp_factor_search(const Multigraph& g, const SearchLimits& limits = {});
FactorWitness sp_factor_search(const Multigraph&& g, const SearchLimits& limits = {}) = delete;

// A spanning k-edge-coloured subgraph searched for directly, if one exists.
std::optional<EdgeColoring> find_spanning_k_ecs(const Multigraph& g, int k, const SearchLimits& limits = {});
std::optional<EdgeColoring> find_spanning_k_ecs(const Multigraph&& g, int k, const SearchLimits& limits = {}) = delete;

// Least k with a spanning k-edge-colourable subgraph.
int sp2_bruteforce(const Multigraph& g, const SearchLimits& limits = {});

// Least k for which some maximum k-edge-colourable subgraph is spanning.
int sp3_bruteforce(const Multigraph& g, const SearchLimits& limits = {});

// sp(G) by the cheapest exact route for the graph's size.
int sp_value(const Multigraph& g, const SearchLimits& limits = {});

// Spanning forest of a [1,k]-factor (one tree per factor component), properly
// coloured with at most k colours.
EdgeColoring spanning_kecs_from_factor(const FactorWitness& factor);

struct ExchangeResult {
  EdgeColoring result;
  int coverage_moves = 0;
  int overlap_moves = 0;
};

// Turns a maximum k-edge-colourable subgraph H into a spanning one, given a
// spanning k-edge-colourable subgraph A. Repeats, for the lowest missed vertex u:
//  - coverage move: for a neighbour u_i of u and an H-edge (u_i, v_i) with
//    d_H(v_i) >= 2, swap (u_i, v_i) out and (u, u_i) in;
//  - otherwise overlap move: for the A-edge e = (u, w) and an H-edge f = (w, z)
//    not in A, swap f out and e in.
// The pair (covered vertices, |A & H|) grows lexicographically with every move.
ExchangeResult exchange_to_spanning_max(const Multigraph& g, int k, const Subgraph& a, const Subgraph& h,
                                        const SearchLimits& limits = {});

// A spanning maximum k-edge-colourable subgraph built from a [1,k]-factor, the
// forest colouring and the exchange, or nothing when G has no [1,k]-factor.
std::optional<EdgeColoring> spanning_max_witness(const Multigraph& g, int k, const SearchLimits& limits = {});
std::optional<EdgeColoring> spanning_max_witness(const Multigraph&& g, int k, const SearchLimits& limits = {}) = delete;
bool spanning_max_exists(const Multigraph& g, int k, const SearchLimits& limits = {});

struct SpResult {
  int value = 0;
  FactorWitness factor;
  EdgeColoring spanning_max;  // spanning, value-edge-coloured, of size nu_value(G)
};

SpResult sp_certificate(const Multigraph& g, const SearchLimits& limits = {});
SpResult sp_certificate(const Multigraph&& g, const SearchLimits& limits = {}) = delete;

}  // namespace spg
