#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spg {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex a;
  Vertex b;

  Vertex other(Vertex v) const { return v == a ? b : a; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite undirected multigraph without loops. Parallel edges are distinct and
// identified by their index, which is the order of insertion.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  Multigraph(int vertex_count, const std::vector<Edge>& edges);

  EdgeId add_edge(Vertex a, Vertex b);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const;

  int degree(Vertex v) const;
  int max_degree() const;
  int min_degree() const;
  bool has_isolated_vertex() const;
  bool is_regular() const { return max_degree() == min_degree(); }

  // Number of parallel edges joining u and w.
  int multiplicity(Vertex u, Vertex w) const;

  // Distinct neighbours of v in ascending order.
  std::vector<Vertex> neighbours(Vertex v) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Multigraph& x, const Multigraph& y) {
    return x.edges_ == y.edges_ && x.vertex_count() == y.vertex_count();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Edge-subset view of a host multigraph. The vertex set is always the host's;
// a vertex untouched by the chosen edges has degree 0. The host must outlive
// the subgraph.
class Subgraph {
 public:
  explicit Subgraph(const Multigraph& host);
  Subgraph(const Multigraph& host, std::vector<EdgeId> edges);
  // The host is held by pointer, so temporaries are refused.
  explicit Subgraph(const Multigraph&&) = delete;
  Subgraph(const Multigraph&&, std::vector<EdgeId>) = delete;

  const Multigraph& host() const { return *host_; }
  std::span<const EdgeId> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);

  int degree(Vertex v) const;
  std::vector<int> degrees() const;
  int max_degree() const;
  bool covers(Vertex v) const { return degree(v) > 0; }
  int covered_count() const;
  bool is_spanning() const;

  // Same host object and same edge set.
  friend bool operator==(const Subgraph& x, const Subgraph& y) {
    return x.host_ == y.host_ && x.edges_ == y.edges_;
  }

  // Materialise as a standalone multigraph on the host's vertex set.
  Multigraph to_multigraph() const;

 private:
  const Multigraph* host_;
  std::vector<EdgeId> edges_;  // sorted, unique
};

using VertexSet = std::vector<Vertex>;

struct VertexDeletion {
  Multigraph graph;
  std::vector<Vertex> original;   // new index -> old index
  std::vector<Vertex> new_index;  // old index -> new index, -1 when deleted
};

struct ComponentProfile {
  std::vector<VertexSet> components;
  int odd_components = 0;
  int isolated_vertices = 0;
};

struct GraftResult {
  Multigraph tree;
  Vertex center;      // centre z of the grafted star
  Vertex attachment;  // the vertex v of T1 the star leaf was identified with
};

// Remaining vertices keep ascending original order.
VertexDeletion delete_vertices(const Multigraph& g, const VertexSet& removed);

ComponentProfile component_profile(const Multigraph& g);
bool is_connected(const Multigraph& g);
bool is_tree(const Multigraph& g);

// Layers V_0 = {v}, V_i = vertices at distance i. Throws InputError when g is disconnected.
std::vector<VertexSet> bfs_layers(const Multigraph& g, Vertex v);

// T1 o K_{1,p}: a leaf of the star is identified with v, which must not have maximum degree.
GraftResult graft(const Multigraph& t1, int p, Vertex v);

// Path on 2k vertices plus K_{1,k} whose centre is joined to an end of the path, k = a*n^b.
Multigraph prop21_tree(int a, int b, int n);

// Replaces edge f = (u, w) of a regular graph by the path u-x-y-w. `perfect_matching`
// must be a perfect matching of h containing f.
Multigraph tightness_graph(const Multigraph& h, const std::vector<EdgeId>& perfect_matching, EdgeId f);

// Graphs used throughout the test-suites.
Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph star_graph(int p);  // K_{1,p}, centre is vertex 0
Multigraph complete_graph(int n);
Multigraph complete_bipartite_graph(int p, int q);
// m edges drawn uniformly from vertex pairs whose multiplicity is still below the cap.
Multigraph random_multigraph(int n, int m, int max_multiplicity, std::uint64_t seed);
// Connected simple cubic graph on n (even, >= 4) vertices from the pairing model.
Multigraph random_cubic_graph(int n, std::uint64_t seed);

// Compact single-line form "n:u-v,u-v,..." used in reports.
std::string compact_string(const Multigraph& g);

}  // namespace spg
