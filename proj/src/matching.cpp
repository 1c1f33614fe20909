#include "spg/matching.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "bitgraph.hpp"
#include "spg/errors.hpp"

namespace spg {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;

// Lowest-index edge between each adjacent pair, keyed by (min, max).
std::vector<EdgeId> representative_edges(const Multigraph& g, BoostGraph& simple) {
  std::vector<EdgeId> reps;
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto key = std::minmax(ed.a, ed.b);
    if (std::find(seen.begin(), seen.end(), std::pair{key.first, key.second}) != seen.end()) continue;
    seen.emplace_back(key.first, key.second);
    reps.push_back(e);
    boost::add_edge(static_cast<std::size_t>(ed.a), static_cast<std::size_t>(ed.b), simple);
  }
  return reps;
}

}  // namespace

bool is_matching(const Subgraph& m) {
  const auto deg = m.degrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
}

Matching maximum_matching(const Multigraph& g) {
  if (g.vertex_count() == 0) return Matching(g);
  BoostGraph simple(static_cast<std::size_t>(g.vertex_count()));
  const auto reps = representative_edges(g, simple);
  std::vector<BoostVertex> mate(static_cast<std::size_t>(g.vertex_count()));
  boost::edmonds_maximum_cardinality_matching(simple, &mate[0]);
  const BoostVertex none = boost::graph_traits<BoostGraph>::null_vertex();
  std::vector<EdgeId> chosen;
  for (EdgeId e : reps) {
    const Edge& ed = g.edge(e);
    if (mate[static_cast<std::size_t>(ed.a)] != none && mate[static_cast<std::size_t>(ed.a)] == static_cast<BoostVertex>(ed.b))
      chosen.push_back(e);
  }
  return Matching(g, std::move(chosen));
}

int matching_number(const Multigraph& g) { return maximum_matching(g).size(); }

VertexSet gallai_edmonds_barrier(const Multigraph& g) {
  const int nu = matching_number(g);
  const int n = g.vertex_count();
  std::vector<bool> missable(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    // v is missed by some maximum matching iff deleting it keeps nu.
    const auto rest = delete_vertices(g, {v});
    missable[static_cast<std::size_t>(v)] = matching_number(rest.graph) == nu;
  }
  VertexSet barrier;
  for (Vertex v = 0; v < n; ++v) {
    if (missable[static_cast<std::size_t>(v)]) continue;
    for (Vertex w : g.neighbours(v)) {
      if (missable[static_cast<std::size_t>(w)]) {
        barrier.push_back(v);
        break;
      }
    }
  }
  return barrier;
}

PerfectMatchingResult has_perfect_matching(const Multigraph& g) {
  PerfectMatchingResult out{false, maximum_matching(g), std::nullopt};
  out.perfect = 2 * out.matching.size() == g.vertex_count();
  if (!out.perfect) out.tutte_violator = gallai_edmonds_barrier(g);
  return out;
}

int odd_components_without(const Multigraph& g, std::uint64_t removed) {
  if (g.vertex_count() > 64) throw ResourceError("subset_vertices", 64, static_cast<std::size_t>(g.vertex_count()));
  return detail::BitGraph(g).odd_components(removed);
}

TutteBergeResult tutte_berge_deficiency(const Multigraph& g, const SearchLimits& limits) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n > limits.subset_vertices || n > 62) throw ResourceError("subset_vertices", limits.subset_vertices, n);
  const detail::BitGraph bits(g);
  TutteBergeResult best{-1, {}};
  std::uint64_t best_mask = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int value = bits.odd_components(s) - std::popcount(s);
    if (value > best.deficiency) {
      best.deficiency = value;
      best_mask = s;
    }
  }
  best.attaining_set = detail::mask_to_vertices(best_mask);
  return best;
}

}  // namespace spg
