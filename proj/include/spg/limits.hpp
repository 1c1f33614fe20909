#pragma once

#include <cstddef>

namespace spg {

// Caps for the exact searches. Exceeding one raises ResourceError naming the cap.
struct SearchLimits {
  // Exhaustive enumeration over vertex subsets S (Tutte-Berge, the [a, b]-factor condition, sp formula).
  std::size_t subset_vertices = 20;
  // Chromatic index, k-edge-colorability and maximum k-edge-colorable subgraphs.
  std::size_t exact_edges = 24;
  // Enumeration of all maximum k-edge-colorable subgraphs.
  std::size_t enumerate_edges = 16;
  // Branching search for [1,k]-factors and spanning k-edge-colorable subgraphs.
  std::size_t factor_edges = 256;
};

}  // namespace spg
