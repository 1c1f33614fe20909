#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "spg/graph.hpp"

namespace spg::detail {

// Depth-first search over (exclude | colour 1..k) decisions for a fixed sequence
// of host edges. Colours are introduced in increasing order, so each edge set is
// reached once per colouring up to permutation of the colours. Host edge ids
// must be < 64 and k <= 62.
class EdgeSearch {
 public:
  EdgeSearch(const Multigraph& g, std::vector<EdgeId> order, int k);

  // Colouring of every edge in the sequence, indexed by host edge id.
  std::optional<std::vector<int>> colour_all();

  // Largest colourable subset. With the sequence in ascending id order the
  // result is the lexicographically smallest set of maximum size.
  std::vector<int> maximise();

  // Every colourable subset of exactly `target` edges, each reported once with
  // the first colouring found. Callback returns false to stop.
  using Visitor = std::function<bool(std::uint64_t mask, const std::vector<int>& colours)>;
  void enumerate(int target, bool spanning_only, const Visitor& visit);

 private:
  enum class Mode { ColourAll, Maximise, Enumerate };

  void dfs(std::size_t pos, int top_colour);
  int bound(std::size_t pos) const;
  void record();

  const Multigraph& g_;
  std::vector<EdgeId> order_;
  int k_;
  Mode mode_ = Mode::ColourAll;

  std::vector<std::uint64_t> used_;
  std::vector<int> rem_;
  std::vector<int> colour_;
  int chosen_ = 0;
  std::uint64_t mask_ = 0;
  bool stop_ = false;

  int best_ = -1;
  std::vector<int> best_colour_;
  int target_ = 0;
  bool spanning_only_ = false;
  std::unordered_set<std::uint64_t> seen_;
  const Visitor* visit_ = nullptr;
};

}  // namespace spg::detail
