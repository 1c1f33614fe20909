#include "spg/edge_coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "edge_search.hpp"
#include "spg/errors.hpp"

namespace spg {

namespace {

constexpr std::size_t kMaxSearchEdges = 64;
constexpr int kMaxColours = 62;

void check_edge_cap(const char* cap, std::size_t limit, std::size_t requested) {
  const std::size_t effective = std::min(limit, kMaxSearchEdges);
  if (requested > effective) throw ResourceError(cap, effective, requested);
}

// More colours than Delta + mu are never needed.
int effective_colours(const Multigraph& g, int k) {
  if (k < 1) throw InputError("number of colours must be positive");
  const int enough = std::max(1, g.max_degree() + max_multiplicity(g));
  return std::min({k, enough, kMaxColours});
}

// Places edges next to already placed neighbours so conflicts surface early.
std::vector<EdgeId> constrained_order(const Multigraph& g) {
  const int m = g.edge_count();
  std::vector<EdgeId> order;
  std::vector<bool> placed(static_cast<std::size_t>(m), false);
  std::vector<int> touching(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int step = 0; step < m; ++step) {
    EdgeId pick = -1;
    std::pair<int, int> best{-1, -1};
    for (EdgeId e = 0; e < m; ++e) {
      if (placed[static_cast<std::size_t>(e)]) continue;
      const Edge& ed = g.edge(e);
      std::pair<int, int> score{touching[static_cast<std::size_t>(ed.a)] + touching[static_cast<std::size_t>(ed.b)],
                                g.degree(ed.a) + g.degree(ed.b)};
      if (score > best) {
        best = score;
        pick = e;
      }
    }
    placed[static_cast<std::size_t>(pick)] = true;
    ++touching[static_cast<std::size_t>(g.edge(pick).a)];
    ++touching[static_cast<std::size_t>(g.edge(pick).b)];
    order.push_back(pick);
  }
  return order;
}

std::vector<EdgeId> all_edges(const Multigraph& g) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

EdgeColoring from_colours(const Multigraph& g, std::vector<int> colours, int k) {
  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (colours[static_cast<std::size_t>(e)] > 0) chosen.push_back(e);
  return EdgeColoring{Subgraph(g, std::move(chosen)), std::move(colours), k};
}

}  // namespace

bool is_proper(const EdgeColoring& c) {
  const Multigraph& g = c.subgraph.host();
  if (c.color_of.size() != static_cast<std::size_t>(g.edge_count())) return false;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(g.vertex_count()),
                                      std::vector<bool>(static_cast<std::size_t>(std::max(c.k, 0)) + 1, false));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int colour = c.color(e);
    if (!c.subgraph.contains(e)) {
      if (colour != 0) return false;
      continue;
    }
    if (colour < 1 || colour > c.k) return false;
    for (Vertex v : {g.edge(e).a, g.edge(e).b}) {
      auto&& slot = seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(colour)];
      if (slot) return false;
      slot = true;
    }
  }
  return true;
}

int max_multiplicity(const Multigraph& g) {
  std::map<std::pair<Vertex, Vertex>, int> count;
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, ++count[std::minmax(e.a, e.b)]);
  return best;
}

std::optional<EdgeColoring> find_k_edge_coloring(const Subgraph& h, int k, const SearchLimits& limits) {
  if (k < 1) throw InputError("number of colours must be positive");
  check_edge_cap("exact_edges", limits.exact_edges, static_cast<std::size_t>(h.size()));
  const Multigraph& host = h.host();
  std::vector<int> colours(static_cast<std::size_t>(host.edge_count()), 0);
  if (h.empty()) return EdgeColoring{h, colours, k};
  if (h.max_degree() > k) return std::nullopt;

  // Search on a compact copy so host edge ids do not matter.
  const Multigraph local = h.to_multigraph();
  const int colours_needed = effective_colours(local, k);
  detail::EdgeSearch search(local, constrained_order(local), colours_needed);
  auto found = search.colour_all();
  if (!found) return std::nullopt;
  for (int i = 0; i < h.size(); ++i) colours[static_cast<std::size_t>(h.edges()[static_cast<std::size_t>(i)])] = (*found)[static_cast<std::size_t>(i)];
  return EdgeColoring{h, std::move(colours), k};
}

ChromaticIndexResult chromatic_index(const Multigraph& g, const SearchLimits& limits) {
  check_edge_cap("exact_edges", limits.exact_edges, static_cast<std::size_t>(g.edge_count()));
  Subgraph whole(g, all_edges(g));
  if (g.edge_count() == 0) return {0, EdgeColoring{whole, std::vector<int>{}, 0}};
  for (int k = g.max_degree();; ++k) {
    if (auto c = find_k_edge_coloring(whole, k, limits)) return {k, std::move(*c)};
  }
}

EdgeColoring max_k_ecs(const Multigraph& g, int k, const SearchLimits& limits) {
  check_edge_cap("exact_edges", limits.exact_edges, static_cast<std::size_t>(g.edge_count()));
  detail::EdgeSearch search(g, all_edges(g), effective_colours(g, k));
  return from_colours(g, search.maximise(), k);
}

int max_k_ecs_size(const Multigraph& g, int k, const SearchLimits& limits) { return max_k_ecs(g, k, limits).subgraph.size(); }

void enumerate_max_k_ecs(const Multigraph& g, int k, const std::function<bool(const EdgeColoring&)>& visit,
                         const SearchLimits& limits) {
  check_edge_cap("enumerate_edges", limits.enumerate_edges, static_cast<std::size_t>(g.edge_count()));
  const int target = max_k_ecs(g, k, limits).subgraph.size();
  std::map<std::vector<EdgeId>, std::vector<int>> found;
  detail::EdgeSearch search(g, all_edges(g), effective_colours(g, k));
  search.enumerate(target, false, [&](std::uint64_t, const std::vector<int>& colours) {
    std::vector<EdgeId> key;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (colours[static_cast<std::size_t>(e)] > 0) key.push_back(e);
    found.emplace(std::move(key), colours);
    return true;
  });
  for (auto& [key, colours] : found)
    if (!visit(from_colours(g, colours, k))) return;
}

std::vector<EdgeColoring> enumerate_max_k_ecs(const Multigraph& g, int k, const SearchLimits& limits) {
  std::vector<EdgeColoring> out;
  enumerate_max_k_ecs(
      g, k,
      [&](const EdgeColoring& c) {
        out.push_back(c);
        return true;
      },
      limits);
  return out;
}

std::optional<EdgeColoring> find_spanning_max_k_ecs(const Multigraph& g, int k, const SearchLimits& limits) {
  check_edge_cap("enumerate_edges", limits.enumerate_edges, static_cast<std::size_t>(g.edge_count()));
  const int target = max_k_ecs(g, k, limits).subgraph.size();
  std::optional<EdgeColoring> hit;
  detail::EdgeSearch search(g, all_edges(g), effective_colours(g, k));
  search.enumerate(target, true, [&](std::uint64_t, const std::vector<int>& colours) {
    hit = from_colours(g, colours, k);
    return false;
  });
  return hit;
}

EdgeColoring color_forest(const Subgraph& forest) {
  const Multigraph& g = forest.host();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeId>> around(n);
  for (EdgeId e : forest.edges()) {
    around[static_cast<std::size_t>(g.edge(e).a)].push_back(e);
    around[static_cast<std::size_t>(g.edge(e).b)].push_back(e);
  }
  std::vector<int> colours(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<std::pair<Vertex, int>> stack{{root, 0}};  // (vertex, colour of its parent edge)
    while (!stack.empty()) {
      auto [v, parent_colour] = stack.back();
      stack.pop_back();
      int next = 1;
      for (EdgeId e : around[static_cast<std::size_t>(v)]) {
        if (colours[static_cast<std::size_t>(e)] > 0) continue;
        const Vertex w = g.edge(e).other(v);
        if (seen[static_cast<std::size_t>(w)]) throw InputError("color_forest: subgraph contains a cycle");
        if (next == parent_colour) ++next;
        colours[static_cast<std::size_t>(e)] = next++;
        seen[static_cast<std::size_t>(w)] = true;
        stack.emplace_back(w, colours[static_cast<std::size_t>(e)]);
      }
    }
  }
  return EdgeColoring{forest, std::move(colours), forest.max_degree()};
}

}  // namespace spg
