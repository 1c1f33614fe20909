#include "spg/sp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bitgraph.hpp"
#include "spg/errors.hpp"
#include "spg/matching.hpp"

namespace spg {

namespace {

void require_no_isolated(const Multigraph& g, const char* op) {
  if (g.vertex_count() == 0 || g.has_isolated_vertex())
    throw PreconditionError(std::string(op) + ": sp is undefined for graphs with isolated vertices");
}

void check_factor_cap(const Multigraph& g, const SearchLimits& limits) {
  if (static_cast<std::size_t>(g.edge_count()) > limits.factor_edges)
    throw ResourceError("factor_edges", limits.factor_edges, static_cast<std::size_t>(g.edge_count()));
}

// Lowest-index edge to every distinct neighbour, per vertex.
std::vector<std::vector<std::pair<Vertex, EdgeId>>> first_edges(const Multigraph& g) {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> out(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& list = out[static_cast<std::size_t>(v)];
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.edge(e).other(v);
      if (std::none_of(list.begin(), list.end(), [w](const auto& p) { return p.first == w; })) list.emplace_back(w, e);
    }
    std::sort(list.begin(), list.end());
  }
  return out;
}

// Vertex-driven search: the most constrained uncovered vertex is covered by one
// new edge per branch. Every minimal spanning subgraph with degrees <= k is
// reachable, so the search is complete for [1,k]-factors. Minimises edge count.
class FactorSearch {
 public:
  FactorSearch(const Multigraph& g, int k) : g_(g), k_(k), nbrs_(first_edges(g)), deg_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  std::optional<std::vector<EdgeId>> run() {
    uncovered_ = g_.vertex_count();
    dfs();
    if (best_.empty() && g_.vertex_count() > 0) return std::nullopt;
    return best_;
  }

 private:
  void dfs() {
    if (uncovered_ == 0) {
      if (best_.empty() || chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (!best_.empty() && chosen_.size() + static_cast<std::size_t>((uncovered_ + 1) / 2) >= best_.size()) return;

    Vertex pick = -1;
    int fewest = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (deg_[static_cast<std::size_t>(v)] > 0) continue;
      int options = 0;
      for (const auto& [w, e] : nbrs_[static_cast<std::size_t>(v)])
        if (deg_[static_cast<std::size_t>(w)] < k_) ++options;
      if (options == 0) return;
      if (pick < 0 || options < fewest) {
        pick = v;
        fewest = options;
      }
    }

    // Uncovered partners first: they cover two vertices with one edge.
    std::vector<std::pair<Vertex, EdgeId>> options;
    for (const auto& [w, e] : nbrs_[static_cast<std::size_t>(pick)])
      if (deg_[static_cast<std::size_t>(w)] == 0) options.emplace_back(w, e);
    for (const auto& [w, e] : nbrs_[static_cast<std::size_t>(pick)])
      if (deg_[static_cast<std::size_t>(w)] > 0 && deg_[static_cast<std::size_t>(w)] < k_) options.emplace_back(w, e);

    for (const auto& [w, e] : options) {
      const int newly = deg_[static_cast<std::size_t>(w)] == 0 ? 2 : 1;
      ++deg_[static_cast<std::size_t>(pick)];
      ++deg_[static_cast<std::size_t>(w)];
      uncovered_ -= newly;
      chosen_.push_back(e);
      dfs();
      chosen_.pop_back();
      uncovered_ += newly;
      --deg_[static_cast<std::size_t>(pick)];
      --deg_[static_cast<std::size_t>(w)];
    }
  }

  const Multigraph& g_;
  int k_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> nbrs_;
  std::vector<int> deg_;
  int uncovered_ = 0;
  std::vector<EdgeId> chosen_;
  std::vector<EdgeId> best_;
};

// Same vertex-driven scheme, but each new edge receives a colour; colours are
// introduced in increasing order. Existence only.
class SpanningColourSearch {
 public:
  SpanningColourSearch(const Multigraph& g, int k)
      : g_(g), k_(k), nbrs_(first_edges(g)), used_(static_cast<std::size_t>(g.vertex_count()), 0),
        colour_(static_cast<std::size_t>(g.edge_count()), 0) {}

  std::optional<std::vector<int>> run() {
    if (dfs(0)) return colour_;
    return std::nullopt;
  }

 private:
  bool dfs(int top) {
    Vertex pick = -1;
    int fewest = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (used_[static_cast<std::size_t>(v)] != 0) continue;
      int options = 0;
      for (const auto& [w, e] : nbrs_[static_cast<std::size_t>(v)])
        if (std::popcount(used_[static_cast<std::size_t>(w)]) < k_) ++options;
      if (options == 0) return false;
      if (pick < 0 || options < fewest) {
        pick = v;
        fewest = options;
      }
    }
    if (pick < 0) return true;

    const auto p = static_cast<std::size_t>(pick);
    for (const auto& [w, e] : nbrs_[p]) {
      const auto wi = static_cast<std::size_t>(w);
      for (int c = 1; c <= std::min(k_, top + 1); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (used_[wi] & bit) continue;
        used_[p] |= bit;
        used_[wi] |= bit;
        colour_[static_cast<std::size_t>(e)] = c;
        if (dfs(std::max(top, c))) return true;
        colour_[static_cast<std::size_t>(e)] = 0;
        used_[p] &= ~bit;
        used_[wi] &= ~bit;
      }
    }
    return false;
  }

  const Multigraph& g_;
  int k_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> nbrs_;
  std::vector<std::uint64_t> used_;
  std::vector<int> colour_;
};

}  // namespace

bool is_factor(const Subgraph& h, int a, int b) {
  const auto deg = h.degrees();
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return a <= d && d <= b; });
}

int sp_formula(const Multigraph& g, const SearchLimits& limits) {
  require_no_isolated(g, "sp_formula");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n > limits.subset_vertices || n > 62) throw ResourceError("subset_vertices", limits.subset_vertices, n);
  if (has_perfect_matching(g).perfect) return 1;
  const detail::BitGraph bits(g);
  int best = 2;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    const int isolated = bits.isolated_after(s);
    best = std::max(best, (isolated + size - 1) / size);
  }
  return best;
}

std::optional<FactorWitness> find_one_k_factor(const Multigraph& g, int k, const SearchLimits& limits) {
  if (k < 1) throw InputError("find_one_k_factor: k must be positive");
  check_factor_cap(g, limits);
  if (g.has_isolated_vertex()) return std::nullopt;
  auto edges = FactorSearch(g, k).run();
  if (!edges) return std::nullopt;
  return FactorWitness{Subgraph(g, std::move(*edges)), 1, k};
}

FactorWitness sp_factor_search(const Multigraph& g, const SearchLimits& limits) {
  require_no_isolated(g, "sp_factor_search");
  for (int k = 1; k <= g.max_degree(); ++k)
    if (auto f = find_one_k_factor(g, k, limits)) return std::move(*f);
  throw std::logic_error("sp_factor_search: G itself is a [1, Delta]-factor");
}

std::optional<EdgeColoring> find_spanning_k_ecs(const Multigraph& g, int k, const SearchLimits& limits) {
  if (k < 1) throw InputError("find_spanning_k_ecs: k must be positive");
  if (k > 62) throw ResourceError("colours", 62, static_cast<std::size_t>(k));
  check_factor_cap(g, limits);
  if (g.has_isolated_vertex()) return std::nullopt;
  auto colours = SpanningColourSearch(g, k).run();
  if (!colours) return std::nullopt;
  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if ((*colours)[static_cast<std::size_t>(e)] > 0) chosen.push_back(e);
  return EdgeColoring{Subgraph(g, std::move(chosen)), std::move(*colours), k};
}

int sp2_bruteforce(const Multigraph& g, const SearchLimits& limits) {
  require_no_isolated(g, "sp2_bruteforce");
  for (int k = 1; k <= g.max_degree(); ++k)
    if (find_spanning_k_ecs(g, k, limits)) return k;
  throw std::logic_error("sp2_bruteforce: no spanning Delta-edge-colourable subgraph found");
}

int sp3_bruteforce(const Multigraph& g, const SearchLimits& limits) {
  require_no_isolated(g, "sp3_bruteforce");
  for (int k = 1; k <= g.max_degree(); ++k)
    if (find_spanning_max_k_ecs(g, k, limits)) return k;
  throw std::logic_error("sp3_bruteforce: no spanning maximum Delta-edge-colourable subgraph found");
}

int sp_value(const Multigraph& g, const SearchLimits& limits) {
  if (static_cast<std::size_t>(g.vertex_count()) <= std::min<std::size_t>(limits.subset_vertices, 20))
    return sp_formula(g, limits);
  return sp_factor_search(g, limits).b;
}

EdgeColoring spanning_kecs_from_factor(const FactorWitness& factor) {
  if (factor.a < 1 || !is_factor(factor.subgraph, factor.a, factor.b))
    throw InputError("spanning_kecs_from_factor: witness is not a [1,k]-factor");
  const Multigraph& g = factor.subgraph.host();
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  std::vector<EdgeId> forest;
  for (EdgeId e : factor.subgraph.edges()) {
    const Vertex x = find(g.edge(e).a), y = find(g.edge(e).b);
    if (x == y) continue;
    parent[static_cast<std::size_t>(x)] = y;
    forest.push_back(e);
  }
  EdgeColoring coloured = color_forest(Subgraph(g, std::move(forest)));
  coloured.k = factor.b;
  return coloured;
}

ExchangeResult exchange_to_spanning_max(const Multigraph& g, int k, const Subgraph& a, const Subgraph& h,
                                        const SearchLimits& limits) {
  if (k < 1) throw InputError("exchange_to_spanning_max: k must be positive");
  if (&a.host() != &g || &h.host() != &g) throw InputError("exchange_to_spanning_max: subgraphs of a different host");
  if (!a.is_spanning()) throw PreconditionError("exchange_to_spanning_max: A is not spanning");
  if (!find_k_edge_coloring(a, k, limits)) throw PreconditionError("exchange_to_spanning_max: A is not k-edge-colourable");
  const int nu_k = max_k_ecs_size(g, k, limits);
  if (h.size() != nu_k)
    throw PreconditionError("exchange_to_spanning_max: H has " + std::to_string(h.size()) + " edges, nu_k is " + std::to_string(nu_k));
  auto start = find_k_edge_coloring(h, k, limits);
  if (!start) throw PreconditionError("exchange_to_spanning_max: H is not k-edge-colourable");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> colour = start->color_of;
  std::vector<int> deg_h(n, 0);
  for (EdgeId e : h.edges()) {
    ++deg_h[static_cast<std::size_t>(g.edge(e).a)];
    ++deg_h[static_cast<std::size_t>(g.edge(e).b)];
  }
  auto in_h = [&](EdgeId e) { return colour[static_cast<std::size_t>(e)] > 0; };
  auto swap_edges = [&](EdgeId out, EdgeId in) {
    colour[static_cast<std::size_t>(in)] = colour[static_cast<std::size_t>(out)];
    colour[static_cast<std::size_t>(out)] = 0;
    for (Vertex v : {g.edge(out).a, g.edge(out).b}) --deg_h[static_cast<std::size_t>(v)];
    for (Vertex v : {g.edge(in).a, g.edge(in).b}) ++deg_h[static_cast<std::size_t>(v)];
  };

  ExchangeResult out{*start, 0, 0};
  const long long move_limit = static_cast<long long>(n) * g.edge_count() + 1;
  for (long long iteration = 0;; ++iteration) {
    if (iteration > move_limit) throw std::logic_error("exchange_to_spanning_max: no progress");
    const auto missed = std::find(deg_h.begin(), deg_h.end(), 0);
    if (missed == deg_h.end()) break;
    const auto u = static_cast<Vertex>(missed - deg_h.begin());

    bool moved = false;
    for (EdgeId eu : g.incident(u)) {
      const Vertex ui = g.edge(eu).other(u);
      if (deg_h[static_cast<std::size_t>(ui)] < k)
        throw std::logic_error("exchange_to_spanning_max: H could be enlarged, so it is not maximum");
      for (EdgeId f : g.incident(ui)) {
        if (!in_h(f) || deg_h[static_cast<std::size_t>(g.edge(f).other(ui))] < 2) continue;
        swap_edges(f, eu);
        ++out.coverage_moves;
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (moved) continue;

    // Every H-neighbour of every u_i now has H-degree 1.
    const auto ae = std::find_if(g.incident(u).begin(), g.incident(u).end(), [&](EdgeId e) { return a.contains(e); });
    const EdgeId e = *ae;
    const Vertex w = g.edge(e).other(u);
    for (EdgeId f : g.incident(w)) {
      if (!in_h(f) || a.contains(f)) continue;
      swap_edges(f, e);
      ++out.overlap_moves;
      moved = true;
      break;
    }
    if (!moved) throw std::logic_error("exchange_to_spanning_max: no H-edge outside A at w");
  }

  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_h(e)) chosen.push_back(e);
  out.result = EdgeColoring{Subgraph(g, std::move(chosen)), std::move(colour), k};
  return out;
}

std::optional<EdgeColoring> spanning_max_witness(const Multigraph& g, int k, const SearchLimits& limits) {
  auto factor = find_one_k_factor(g, k, limits);
  if (!factor) return std::nullopt;
  const EdgeColoring a = spanning_kecs_from_factor(*factor);
  const EdgeColoring h = max_k_ecs(g, k, limits);
  return exchange_to_spanning_max(g, k, a.subgraph, h.subgraph, limits).result;
}

bool spanning_max_exists(const Multigraph& g, int k, const SearchLimits& limits) {
  return spanning_max_witness(g, k, limits).has_value();
}

SpResult sp_certificate(const Multigraph& g, const SearchLimits& limits) {
  FactorWitness factor = sp_factor_search(g, limits);
  const int k = factor.b;
  const EdgeColoring a = spanning_kecs_from_factor(factor);
  const EdgeColoring h = max_k_ecs(g, k, limits);
  EdgeColoring spanning = exchange_to_spanning_max(g, k, a.subgraph, h.subgraph, limits).result;
  return SpResult{k, std::move(factor), std::move(spanning)};
}

}  // namespace spg
