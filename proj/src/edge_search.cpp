#include "edge_search.hpp"

#include <algorithm>
#include <bit>

namespace spg::detail {

EdgeSearch::EdgeSearch(const Multigraph& g, std::vector<EdgeId> order, int k)
    : g_(g),
      order_(std::move(order)),
      k_(k),
      used_(static_cast<std::size_t>(g.vertex_count()), 0),
      rem_(static_cast<std::size_t>(g.vertex_count()), 0),
      colour_(static_cast<std::size_t>(g.edge_count()), 0) {
  for (EdgeId e : order_) {
    ++rem_[static_cast<std::size_t>(g_.edge(e).a)];
    ++rem_[static_cast<std::size_t>(g_.edge(e).b)];
  }
}

int EdgeSearch::bound(std::size_t pos) const {
  const int remaining = static_cast<int>(order_.size() - pos);
  if (remaining == 0) return 0;
  const std::uint64_t palette = ((std::uint64_t{1} << k_) - 1) << 1;

  int shareable = 0;
  for (std::size_t i = pos; i < order_.size(); ++i) {
    const Edge& e = g_.edge(order_[i]);
    if (palette & ~used_[static_cast<std::size_t>(e.a)] & ~used_[static_cast<std::size_t>(e.b)]) ++shareable;
  }

  int capacity = 0;
  std::vector<int> free_count(static_cast<std::size_t>(k_) + 1, 0);
  for (std::size_t v = 0; v < rem_.size(); ++v) {
    if (rem_[v] == 0) continue;
    const int free = k_ - std::popcount(used_[v]);
    capacity += std::min(free, rem_[v]);
    for (std::uint64_t f = palette & ~used_[v]; f; f &= f - 1) ++free_count[static_cast<std::size_t>(std::countr_zero(f))];
  }
  int per_colour = 0;
  for (int c = 1; c <= k_; ++c) per_colour += free_count[static_cast<std::size_t>(c)] / 2;

  return std::min({remaining, shareable, capacity / 2, per_colour});
}

void EdgeSearch::record() {
  if (mode_ == Mode::Maximise) {
    if (chosen_ > best_) {
      best_ = chosen_;
      best_colour_ = colour_;
    }
    return;
  }
  if (mode_ == Mode::ColourAll) {
    best_ = chosen_;
    best_colour_ = colour_;
    stop_ = true;
    return;
  }
  if (spanning_only_ && std::any_of(used_.begin(), used_.end(), [](std::uint64_t u) { return u == 0; })) return;
  if (!seen_.insert(mask_).second) return;
  if (!(*visit_)(mask_, colour_)) stop_ = true;
}

void EdgeSearch::dfs(std::size_t pos, int top_colour) {
  if (stop_) return;
  if (mode_ == Mode::Enumerate && chosen_ == target_) {
    record();
    return;
  }
  if (pos == order_.size()) {
    if (mode_ != Mode::Enumerate) record();
    return;
  }
  const int ub = bound(pos);
  switch (mode_) {
    case Mode::ColourAll:
      if (ub < static_cast<int>(order_.size() - pos)) return;
      break;
    case Mode::Maximise:
      if (chosen_ + ub <= best_) return;
      break;
    case Mode::Enumerate:
      if (chosen_ + ub < target_) return;
      break;
  }

  const EdgeId e = order_[pos];
  const auto a = static_cast<std::size_t>(g_.edge(e).a);
  const auto b = static_cast<std::size_t>(g_.edge(e).b);
  --rem_[a];
  --rem_[b];
  const bool dead_end = spanning_only_ && ((rem_[a] == 0 && used_[a] == 0) || (rem_[b] == 0 && used_[b] == 0));

  const int colours = std::min(k_, top_colour + 1);
  for (int c = 1; c <= colours && !stop_; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    if ((used_[a] | used_[b]) & bit) continue;
    used_[a] |= bit;
    used_[b] |= bit;
    colour_[static_cast<std::size_t>(e)] = c;
    mask_ |= std::uint64_t{1} << e;
    ++chosen_;
    dfs(pos + 1, std::max(top_colour, c));
    --chosen_;
    mask_ &= ~(std::uint64_t{1} << e);
    colour_[static_cast<std::size_t>(e)] = 0;
    used_[a] &= ~bit;
    used_[b] &= ~bit;
  }
  if (mode_ != Mode::ColourAll && !dead_end && !stop_) dfs(pos + 1, top_colour);
  ++rem_[a];
  ++rem_[b];
}

std::optional<std::vector<int>> EdgeSearch::colour_all() {
  mode_ = Mode::ColourAll;
  stop_ = false;
  best_ = -1;
  dfs(0, 0);
  if (best_ < 0) return std::nullopt;
  return best_colour_;
}

std::vector<int> EdgeSearch::maximise() {
  mode_ = Mode::Maximise;
  stop_ = false;
  // Greedy lower bound, lowered by one so that the first maximum set in search
  // order is the one recorded.
  std::vector<std::uint64_t> used(used_.size(), 0);
  int greedy = 0;
  for (EdgeId e : order_) {
    const auto a = static_cast<std::size_t>(g_.edge(e).a), b = static_cast<std::size_t>(g_.edge(e).b);
    for (int c = 1; c <= k_; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if ((used[a] | used[b]) & bit) continue;
      used[a] |= bit;
      used[b] |= bit;
      ++greedy;
      break;
    }
  }
  best_ = greedy - 1;
  dfs(0, 0);
  return best_colour_;
}

void EdgeSearch::enumerate(int target, bool spanning_only, const Visitor& visit) {
  mode_ = Mode::Enumerate;
  stop_ = false;
  target_ = target;
  spanning_only_ = spanning_only;
  visit_ = &visit;
  seen_.clear();
  if (spanning_only) {
    for (std::size_t v = 0; v < rem_.size(); ++v)
      if (rem_[v] == 0) return;
  }
  dfs(0, 0);
  seen_.clear();
}

}  // namespace spg::detail
