#include "spg/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "spg/errors.hpp"

namespace spg {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix m(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++m[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)];
    ++m[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)];
  }
  return m;
}

std::vector<int> refine_colours(const Multigraph& g, const Matrix& m) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = g.degree(static_cast<Vertex>(v));
  for (;;) {
    std::vector<std::vector<int>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> around;
      for (std::size_t w = 0; w < n; ++w)
        if (m[v][w] > 0) around.push_back(colour[w] * 64 + m[v][w]);
      std::sort(around.begin(), around.end());
      signature[v].push_back(colour[v]);
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& s : signature) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> refined(n);
    for (std::size_t v = 0; v < n; ++v) refined[v] = ids[signature[v]];
    std::set<int> before(colour.begin(), colour.end());
    colour = refined;
    if (static_cast<std::size_t>(next) == before.size()) break;
  }
  return colour;
}

std::string encode(const Matrix& m, const std::vector<Vertex>& order) {
  std::string code;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      code.push_back(static_cast<char>('0' + m[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])]));
  return code;
}

void rooted_code(const Multigraph& t, Vertex v, Vertex parent, std::string& out) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbours(v)) {
    if (w == parent) continue;
    std::string c;
    rooted_code(t, w, v, c);
    children.push_back(std::move(c));
  }
  std::sort(children.begin(), children.end());
  out.push_back('(');
  for (const auto& c : children) out += c;
  out.push_back(')');
}

}  // namespace

CanonicalLabeling canonical_labeling(const Multigraph& g) {
  const Matrix m = multiplicity_matrix(g);
  const std::vector<int> colour = refine_colours(g, m);
  std::map<int, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < g.vertex_count(); ++v) cells[colour[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<Vertex>> cell_list;
  std::string header = std::to_string(g.vertex_count()) + "|";
  for (auto& [c, members] : cells) {
    header += std::to_string(c) + "x" + std::to_string(members.size()) + ";";
    cell_list.push_back(members);
  }

  CanonicalLabeling best;
  bool have = false;
  std::vector<Vertex> order;
  std::function<void(std::size_t)> place = [&](std::size_t cell) {
    if (cell == cell_list.size()) {
      std::string code = encode(m, order);
      if (!have || code < best.code) {
        best.code = std::move(code);
        best.order = order;
        have = true;
      }
      return;
    }
    std::vector<Vertex> perm = cell_list[cell];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      place(cell + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  place(0);
  best.code = header + best.code;
  return best;
}

std::string canonical_form(const Multigraph& g) { return canonical_labeling(g).code; }

Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& order) {
  if (order.size() != static_cast<std::size_t>(g.vertex_count())) throw InputError("relabel: order size mismatch");
  std::vector<Vertex> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = position[static_cast<std::size_t>(e.a)], b = position[static_cast<std::size_t>(e.b)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  Multigraph out(g.vertex_count());
  for (const auto& [a, b] : edges) out.add_edge(a, b);
  return out;
}

std::string tree_canonical_form(const Multigraph& tree) {
  if (!is_tree(tree)) throw InputError("tree_canonical_form: not a tree");
  const int n = tree.vertex_count();
  if (n == 1) return "()";
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = tree.degree(v);
    if (degree[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<Vertex> next;
    for (Vertex leaf : leaves) {
      for (Vertex w : tree.neighbours(leaf))
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    }
    leaves = std::move(next);
  }
  std::string best;
  for (Vertex c : leaves) {
    std::string code;
    rooted_code(tree, c, -1, code);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Multigraph> connected_simple_graphs(int n) {
  if (n < 1) throw InputError("connected_simple_graphs: n must be positive");
  std::map<std::string, Multigraph> level;
  level.emplace(canonical_form(Multigraph(1)), Multigraph(1));
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Multigraph> next;
    for (const auto& [code, g] : level) {
      for (unsigned mask = 1; mask < (1u << (size - 1)); ++mask) {
        Multigraph h(size);
        for (const Edge& e : g.edges()) h.add_edge(e.a, e.b);
        for (int v = 0; v < size - 1; ++v)
          if (mask & (1u << v)) h.add_edge(v, size - 1);
        auto lab = canonical_labeling(h);
        if (!next.contains(lab.code)) next.emplace(lab.code, relabel(h, lab.order));
      }
    }
    level = std::move(next);
  }
  std::vector<Multigraph> out;
  for (auto& [code, g] : level) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(),
                   [](const Multigraph& x, const Multigraph& y) { return x.edge_count() < y.edge_count(); });
  return out;
}

std::vector<Multigraph> multigraph_variants(const Multigraph& simple, int max_multiplicity, int max_edges) {
  std::map<std::string, Multigraph> found;
  const int m = simple.edge_count();
  std::vector<int> mult(static_cast<std::size_t>(m), 1);
  std::function<void(int, int)> assign = [&](int i, int total) {
    if (i == m) {
      if (total == m) return;  // every edge simple
      Multigraph g(simple.vertex_count());
      for (EdgeId e = 0; e < m; ++e)
        for (int r = 0; r < mult[static_cast<std::size_t>(e)]; ++r) g.add_edge(simple.edge(e).a, simple.edge(e).b);
      auto lab = canonical_labeling(g);
      if (!found.contains(lab.code)) found.emplace(lab.code, relabel(g, lab.order));
      return;
    }
    for (int k = 1; k <= max_multiplicity; ++k) {
      if (total + k + (m - i - 1) > max_edges) break;
      mult[static_cast<std::size_t>(i)] = k;
      assign(i + 1, total + k);
    }
  };
  if (m <= max_edges) assign(0, 0);
  std::vector<Multigraph> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Multigraph> free_trees(int n) {
  if (n < 1) throw InputError("free_trees: n must be positive");
  std::map<std::string, Multigraph> level;
  level.emplace("()", Multigraph(1));
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Multigraph> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < size - 1; ++v) {
        Multigraph grown(size);
        for (const Edge& e : t.edges()) grown.add_edge(e.a, e.b);
        grown.add_edge(v, size - 1);
        std::string c = tree_canonical_form(grown);
        if (!next.contains(c)) next.emplace(std::move(c), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Multigraph> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

}  // namespace spg
