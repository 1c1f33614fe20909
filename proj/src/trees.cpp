#include "spg/trees.hpp"

#include <algorithm>

#include "spg/errors.hpp"
#include "spg/sp.hpp"

namespace spg {

namespace {

void require_tree(const Multigraph& t, const char* op) {
  if (!is_tree(t)) throw InputError(std::string(op) + ": input is not a tree");
}

bool is_star(const Multigraph& t) {
  return t.vertex_count() <= 2 || t.max_degree() == t.vertex_count() - 1;
}

EdgeId tree_edge(const Multigraph& t, Vertex u, Vertex w) {
  for (EdgeId e : t.incident(u))
    if (t.edge(e).other(u) == w) return e;
  throw std::logic_error("tree_edge: vertices are not adjacent");
}

std::string case_name(OperPropCase c) {
  switch (c) {
    case OperPropCase::A: return "p < sp(T1) = Delta(T1)";
    case OperPropCase::B: return "p <= sp(T1) < Delta(T1)";
    case OperPropCase::C: return "sp(T1) < p";
    case OperPropCase::D: return "p = sp(T1) = Delta(T1)";
  }
  return "";
}

}  // namespace

DegreeClassification classify_ab(const Multigraph& t) {
  require_tree(t, "classify_ab");
  DegreeClassification out;
  const int top = t.max_degree();
  for (Vertex v = 0; v < t.vertex_count(); ++v) (t.degree(v) == top ? out.a : out.b).push_back(v);
  return out;
}

Subgraph layered_star_decomposition(const Multigraph& t, Vertex v) {
  require_tree(t, "layered_star_decomposition");
  t.check_vertex(v);
  if (t.vertex_count() < 3) throw PreconditionError("layered_star_decomposition: tree has fewer than 3 vertices");
  if (t.degree(v) == t.max_degree()) throw PreconditionError("layered_star_decomposition: v has maximum degree");

  Subgraph h(t);
  std::vector<bool> gone(static_cast<std::size_t>(t.vertex_count()), false);
  VertexSet removed;
  for (;;) {
    const VertexDeletion rest = delete_vertices(t, removed);
    const int left = rest.graph.vertex_count();
    if (left == 0 || (left == 1 && rest.original[0] == v)) break;
    const auto layers = bfs_layers(rest.graph, rest.new_index[static_cast<std::size_t>(v)]);
    const std::size_t deepest = layers.size() - 1;
    for (Vertex u : layers[deepest]) {
      for (Vertex z : rest.graph.neighbours(u)) {
        if (!std::binary_search(layers[deepest - 1].begin(), layers[deepest - 1].end(), z)) continue;
        const Vertex ou = rest.original[static_cast<std::size_t>(u)], oz = rest.original[static_cast<std::size_t>(z)];
        h.insert(tree_edge(t, ou, oz));
        gone[static_cast<std::size_t>(ou)] = gone[static_cast<std::size_t>(oz)] = true;
      }
    }
    removed.clear();
    for (Vertex x = 0; x < t.vertex_count(); ++x)
      if (gone[static_cast<std::size_t>(x)]) removed.push_back(x);
  }
  return h;
}

Subgraph extend_to_spanning_delta(const Multigraph& t, Vertex v, const Subgraph& h) {
  require_tree(t, "extend_to_spanning_delta");
  t.check_vertex(v);
  if (&h.host() != &t) throw InputError("extend_to_spanning_delta: subgraph of a different host");
  if (h.covers(v)) throw PreconditionError("extend_to_spanning_delta: the decomposition already covers v");
  Subgraph out = h;
  out.insert(t.incident(v).front());
  return out;
}

std::optional<PeelStep> peel_step(const Multigraph& t) {
  require_tree(t, "peel_step");
  if (is_star(t)) return std::nullopt;
  for (Vertex z = 0; z < t.vertex_count(); ++z) {
    const int p = t.degree(z);
    if (p < 2) continue;
    VertexSet leaves;
    Vertex w = -1;
    for (Vertex x : t.neighbours(z)) (t.degree(x) == 1 ? leaves.push_back(x) : void(w = x));
    if (static_cast<int>(leaves.size()) != p - 1) continue;
    VertexSet removed = leaves;
    removed.push_back(z);
    std::sort(removed.begin(), removed.end());
    VertexDeletion rest = delete_vertices(t, removed);
    return PeelStep{std::move(rest.graph), std::move(rest.original), z, std::move(leaves), p,
                    rest.new_index[static_cast<std::size_t>(w)]};
  }
  throw std::logic_error("peel_step: a tree that is not a star has a vertex with all but one neighbour leaves");
}

Multigraph replay(const PeelCertificate& certificate) {
  Multigraph current = certificate.base;
  std::vector<Vertex> place(static_cast<std::size_t>(current.vertex_count()));
  for (std::size_t i = 0; i < place.size(); ++i) place[i] = static_cast<Vertex>(i);

  for (auto it = certificate.steps.rbegin(); it != certificate.steps.rend(); ++it) {
    const PeelStep& step = *it;
    const Vertex base_count = current.vertex_count();
    GraftResult grown = graft(current, step.p, place[static_cast<std::size_t>(step.attachment)]);
    std::vector<Vertex> next(step.original.size() + 1 + step.leaves.size());
    for (std::size_t r = 0; r < step.original.size(); ++r)
      next[static_cast<std::size_t>(step.original[r])] = place[r];
    next[static_cast<std::size_t>(step.center)] = base_count;
    for (std::size_t i = 0; i < step.leaves.size(); ++i)
      next[static_cast<std::size_t>(step.leaves[i])] = base_count + 1 + static_cast<Vertex>(i);
    current = std::move(grown.tree);
    place = std::move(next);
  }
  return current;
}

SpDeltaTreeResult is_sp_delta_tree(const Multigraph& t) {
  require_tree(t, "is_sp_delta_tree");
  if (t.vertex_count() < 2) throw PreconditionError("is_sp_delta_tree: single vertex is isolated");

  PeelCertificate certificate;
  Multigraph current = t;
  while (auto step = peel_step(current)) {
    const Multigraph& rest = step->remainder;
    if (rest.vertex_count() < 3) return {};
    const int top = rest.max_degree();
    if (step->p != top || rest.degree(step->attachment) == top) return {};
    current = rest;
    certificate.steps.push_back(std::move(*step));
  }
  certificate.base = std::move(current);
  return {true, std::move(certificate)};
}

bool sp_delta_connected(const Multigraph& g) {
  if (!is_connected(g)) throw InputError("sp_delta_connected: graph is disconnected");
  if (g.has_isolated_vertex()) throw PreconditionError("sp_delta_connected: graph has an isolated vertex");
  const int n = g.vertex_count();
  if (g.edge_count() == n && g.max_degree() == 2 && g.min_degree() == 2) return n % 2 == 1;
  if (is_tree(g)) return is_sp_delta_tree(g).sp_equals_delta;
  return false;
}

bool sp_delta(const Multigraph& g) {
  if (g.vertex_count() == 0 || g.has_isolated_vertex())
    throw PreconditionError("sp_delta: sp is undefined for graphs with isolated vertices");
  const int top = g.max_degree();
  for (const VertexSet& component : component_profile(g).components) {
    VertexSet outside;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!std::binary_search(component.begin(), component.end(), v)) outside.push_back(v);
    const Multigraph c = delete_vertices(g, outside).graph;
    if (c.max_degree() == top && sp_delta_connected(c)) return true;
  }
  return false;
}

OperPropCase operprop_case_of(const Multigraph& t1, int p, const SearchLimits& limits) {
  require_tree(t1, "operprop_case_of");
  const int sp1 = sp_value(t1, limits), top = t1.max_degree();
  if (sp1 < p) return OperPropCase::C;
  if (sp1 < top) return OperPropCase::B;
  return p < sp1 ? OperPropCase::A : OperPropCase::D;
}

bool verify_operprop_case(const Multigraph& t1, int p, Vertex v, OperPropCase c, const SearchLimits& limits) {
  const GraftResult grown = graft(t1, p, v);
  const OperPropCase actual = operprop_case_of(t1, p, limits);
  if (actual != c)
    throw PreconditionError("verify_operprop_case: hypothesis " + case_name(c) + " fails (sp(T1) = " +
                            std::to_string(sp_value(t1, limits)) + ", Delta(T1) = " + std::to_string(t1.max_degree()) +
                            ", p = " + std::to_string(p) + ")");
  const bool equal = sp_value(grown.tree, limits) == grown.tree.max_degree();
  return c == OperPropCase::D ? equal : !equal;
}

}  // namespace spg
