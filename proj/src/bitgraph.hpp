#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "spg/graph.hpp"

namespace spg::detail {

// Adjacency bitmasks for the subset enumerations; requires n <= 64.
struct BitGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<std::vector<std::pair<Vertex, int>>> weighted;  // (neighbour, multiplicity)

  explicit BitGraph(const Multigraph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(n), 0), weighted(adj.size()) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbours(v)) {
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
        weighted[static_cast<std::size_t>(v)].emplace_back(w, g.multiplicity(v, w));
      }
    }
  }

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  int odd_components(std::uint64_t removed) const {
    std::uint64_t left = all() & ~removed;
    int odd = 0;
    while (left) {
      std::uint64_t comp = left & (~left + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t grow = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) grow |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        grow &= left & ~comp;
        comp |= grow;
        frontier = grow;
      }
      if (std::popcount(comp) % 2 == 1) ++odd;
      left &= ~comp;
    }
    return odd;
  }

  // Vertices outside `removed` with no neighbour outside it.
  int isolated_after(std::uint64_t removed) const {
    const std::uint64_t keep = all() & ~removed;
    int count = 0;
    for (std::uint64_t f = keep; f; f &= f - 1)
      if ((adj[static_cast<std::size_t>(std::countr_zero(f))] & keep) == 0) ++count;
    return count;
  }

  int degree_after(Vertex v, std::uint64_t removed) const {
    int d = 0;
    for (const auto& [w, mult] : weighted[static_cast<std::size_t>(v)])
      if (!(removed >> w & 1)) d += mult;
    return d;
  }
};

inline std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace spg::detail
