#include "spg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "spg/errors.hpp"
#include "spg/rng.hpp"

namespace spg {

Multigraph::Multigraph(int vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  incident_.resize(static_cast<std::size_t>(vertex_count));
}

Multigraph::Multigraph(int vertex_count, const std::vector<Edge>& edges) : Multigraph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.a, e.b);
}

EdgeId Multigraph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InputError("loop at vertex " + std::to_string(a));
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({a, b});
  incident_[static_cast<std::size_t>(a)].push_back(id);
  incident_[static_cast<std::size_t>(b)].push_back(id);
  return id;
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(vertex_count()) + ")");
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw InputError("edge index " + std::to_string(e) + " out of range");
  return edges_[static_cast<std::size_t>(e)];
}

std::span<const EdgeId> Multigraph::incident(Vertex v) const {
  check_vertex(v);
  return incident_[static_cast<std::size_t>(v)];
}

int Multigraph::degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

int Multigraph::max_degree() const {
  int best = 0;
  for (const auto& inc : incident_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

int Multigraph::min_degree() const {
  if (incident_.empty()) return 0;
  int best = edge_count() * 2;
  for (const auto& inc : incident_) best = std::min(best, static_cast<int>(inc.size()));
  return best;
}

bool Multigraph::has_isolated_vertex() const {
  return std::any_of(incident_.begin(), incident_.end(), [](const auto& inc) { return inc.empty(); });
}

int Multigraph::multiplicity(Vertex u, Vertex w) const {
  int count = 0;
  for (EdgeId e : incident(u))
    if (edges_[static_cast<std::size_t>(e)].other(u) == w) ++count;
  return count;
}

std::vector<Vertex> Multigraph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incident(v)) out.push_back(edges_[static_cast<std::size_t>(e)].other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgraph::Subgraph(const Multigraph& host) : host_(&host) {}

Subgraph::Subgraph(const Multigraph& host, std::vector<EdgeId> edges) : host_(&host), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (EdgeId e : edges_) host.edge(e);
}

bool Subgraph::contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

void Subgraph::insert(EdgeId e) {
  host_->edge(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void Subgraph::erase(EdgeId e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) edges_.erase(it);
}

int Subgraph::degree(Vertex v) const {
  int d = 0;
  for (EdgeId e : host_->incident(v))
    if (contains(e)) ++d;
  return d;
}

std::vector<int> Subgraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(host_->vertex_count()), 0);
  for (EdgeId e : edges_) {
    const Edge& ed = host_->edge(e);
    ++deg[static_cast<std::size_t>(ed.a)];
    ++deg[static_cast<std::size_t>(ed.b)];
  }
  return deg;
}

int Subgraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Subgraph::covered_count() const {
  const auto deg = degrees();
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; }));
}

bool Subgraph::is_spanning() const { return covered_count() == host_->vertex_count(); }

Multigraph Subgraph::to_multigraph() const {
  Multigraph g(host_->vertex_count());
  for (EdgeId e : edges_) g.add_edge(host_->edge(e).a, host_->edge(e).b);
  return g;
}

VertexDeletion delete_vertices(const Multigraph& g, const VertexSet& removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : removed) {
    g.check_vertex(v);
    gone[static_cast<std::size_t>(v)] = true;
  }
  VertexDeletion out;
  out.new_index.assign(gone.size(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    out.new_index[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  out.graph = Multigraph(static_cast<int>(out.original.size()));
  for (const Edge& e : g.edges()) {
    const Vertex a = out.new_index[static_cast<std::size_t>(e.a)];
    const Vertex b = out.new_index[static_cast<std::size_t>(e.b)];
    if (a >= 0 && b >= 0) out.graph.add_edge(a, b);
  }
  return out;
}

ComponentProfile component_profile(const Multigraph& g) {
  ComponentProfile profile;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId e : g.incident(comp[i])) {
        const Vertex w = g.edge(e).other(comp[i]);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() % 2 == 1) ++profile.odd_components;
    profile.components.push_back(std::move(comp));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) ++profile.isolated_vertices;
  return profile;
}

bool is_connected(const Multigraph& g) { return component_profile(g).components.size() <= 1; }

bool is_tree(const Multigraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::vector<VertexSet> bfs_layers(const Multigraph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexSet> layers{{v}};
  dist[static_cast<std::size_t>(v)] = 0;
  std::size_t reached = 1;
  while (true) {
    VertexSet next;
    for (Vertex u : layers.back()) {
      for (EdgeId e : g.incident(u)) {
        const Vertex w = g.edge(e).other(u);
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = static_cast<int>(layers.size());
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    reached += next.size();
    layers.push_back(std::move(next));
  }
  if (reached != static_cast<std::size_t>(g.vertex_count())) throw InputError("bfs_layers: graph is disconnected");
  return layers;
}

GraftResult graft(const Multigraph& t1, int p, Vertex v) {
  if (!is_tree(t1)) throw InputError("graft: T1 is not a tree");
  if (t1.vertex_count() < 3) throw PreconditionError("graft: T1 needs at least 3 vertices");
  if (p < 2) throw PreconditionError("graft: star size p must be at least 2");
  t1.check_vertex(v);
  if (t1.degree(v) >= t1.max_degree())
    throw PreconditionError("graft: vertex " + std::to_string(v) + " has maximum degree (v is in A(T1))");
  GraftResult out{t1, t1.vertex_count(), v};
  out.tree = Multigraph(t1.vertex_count() + p);
  for (const Edge& e : t1.edges()) out.tree.add_edge(e.a, e.b);
  out.tree.add_edge(v, out.center);
  for (int i = 1; i < p; ++i) out.tree.add_edge(out.center, out.center + i);
  return out;
}

Multigraph prop21_tree(int a, int b, int n) {
  if (a < 1 || b < 1 || n < 4) throw InputError("prop21_tree: need a >= 1, b >= 1, n >= 4");
  long long k = a;
  for (int i = 0; i < b; ++i) {
    k *= n;
    if (k > 1'000'000) throw InputError("prop21_tree: a*n^b too large");
  }
  const int kk = static_cast<int>(k);
  Multigraph g(3 * kk + 1);
  for (int i = 0; i + 1 < 2 * kk; ++i) g.add_edge(i, i + 1);
  const Vertex center = 2 * kk;
  g.add_edge(2 * kk - 1, center);
  for (int i = 1; i <= kk; ++i) g.add_edge(center, center + i);
  return g;
}

Multigraph tightness_graph(const Multigraph& h, const std::vector<EdgeId>& perfect_matching, EdgeId f) {
  if (h.vertex_count() == 0 || !h.is_regular()) throw PreconditionError("tightness_graph: H is not regular");
  std::vector<int> hits(static_cast<std::size_t>(h.vertex_count()), 0);
  for (EdgeId e : perfect_matching) {
    ++hits[static_cast<std::size_t>(h.edge(e).a)];
    ++hits[static_cast<std::size_t>(h.edge(e).b)];
  }
  if (std::any_of(hits.begin(), hits.end(), [](int x) { return x != 1; }))
    throw PreconditionError("tightness_graph: supplied edge set is not a perfect matching");
  if (std::find(perfect_matching.begin(), perfect_matching.end(), f) == perfect_matching.end())
    throw PreconditionError("tightness_graph: f is not in the perfect matching");
  const int n = h.vertex_count();
  Multigraph g(n + 2);
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (e != f) g.add_edge(h.edge(e).a, h.edge(e).b);
  g.add_edge(h.edge(f).a, n);
  g.add_edge(n, n + 1);
  g.add_edge(n + 1, h.edge(f).b);
  return g;
}

Multigraph path_graph(int n) {
  if (n < 1) throw InputError("path_graph: n must be positive");
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph cycle_graph(int n) {
  if (n < 2) throw InputError("cycle_graph: n must be at least 2");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph star_graph(int p) {
  if (p < 1) throw InputError("star_graph: p must be positive");
  Multigraph g(p + 1);
  for (int i = 1; i <= p; ++i) g.add_edge(0, i);
  return g;
}

Multigraph complete_graph(int n) {
  if (n < 1) throw InputError("complete_graph: n must be positive");
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph complete_bipartite_graph(int p, int q) {
  if (p < 1 || q < 1) throw InputError("complete_bipartite_graph: sides must be positive");
  Multigraph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Multigraph random_multigraph(int n, int m, int max_multiplicity, std::uint64_t seed) {
  if (n < 2 || m < 0 || max_multiplicity < 1) throw InputError("random_multigraph: bad parameters");
  const long long capacity = static_cast<long long>(n) * (n - 1) / 2 * max_multiplicity;
  if (m > capacity) throw InputError("random_multigraph: m exceeds pair capacity");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> used(pairs.size(), 0);
  std::vector<std::size_t> open(pairs.size());
  std::iota(open.begin(), open.end(), std::size_t{0});
  Multigraph g(n);
  for (int i = 0; i < m; ++i) {
    const std::size_t slot = rng.below(open.size());
    const std::size_t pair = open[slot];
    g.add_edge(pairs[pair].first, pairs[pair].second);
    if (++used[pair] == max_multiplicity) open.erase(open.begin() + static_cast<std::ptrdiff_t>(slot));
  }
  return g;
}

Multigraph random_cubic_graph(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InputError("random_cubic_graph: n must be even and at least 4");
  Rng rng(seed);
  std::vector<Vertex> points(static_cast<std::size_t>(3 * n));
  for (;;) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
    for (std::size_t i = points.size() - 1; i > 0; --i) std::swap(points[i], points[rng.below(i + 1)]);
    Multigraph g(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const Vertex a = points[i], b = points[i + 1];
      if (a == b || g.multiplicity(a, b) > 0) simple = false;
      else g.add_edge(a, b);
    }
    if (simple && is_connected(g)) return g;
  }
}

std::string compact_string(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e) out += ',';
    out += std::to_string(g.edge(e).a) + '-' + std::to_string(g.edge(e).b);
  }
  return out;
}

}  // namespace spg
