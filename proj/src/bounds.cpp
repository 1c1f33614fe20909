#include "spg/bounds.hpp"

#include <algorithm>
#include <bit>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "bitgraph.hpp"
#include "spg/errors.hpp"
#include "spg/matching.hpp"

namespace spg {

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;
using Arc = FlowTraits::edge_descriptor;

// Max flow with lower bounds on arcs, solved as a circulation through an extra
// source and sink.
class BoundedFlow {
 public:
  explicit BoundedFlow(int nodes) : graph_(static_cast<std::size_t>(nodes) + 2), excess_(static_cast<std::size_t>(nodes), 0) {}

  Arc add(int from, int to, long lower, long upper) {
    excess_[static_cast<std::size_t>(to)] += lower;
    excess_[static_cast<std::size_t>(from)] -= lower;
    return add_raw(from, to, upper - lower);
  }

  bool feasible() {
    const int nodes = static_cast<int>(excess_.size());
    const int source = nodes, sink = nodes + 1;
    long need = 0;
    for (int x = 0; x < nodes; ++x) {
      const long ex = excess_[static_cast<std::size_t>(x)];
      if (ex > 0) {
        add_raw(source, x, ex);
        need += ex;
      } else if (ex < 0) {
        add_raw(x, sink, -ex);
      }
    }
    return boost::push_relabel_max_flow(graph_, static_cast<std::size_t>(source), static_cast<std::size_t>(sink)) == need;
  }

  long flow(Arc a) const {
    return boost::get(boost::edge_capacity, graph_, a) - boost::get(boost::edge_residual_capacity, graph_, a);
  }

 private:
  Arc add_raw(int from, int to, long capacity) {
    const Arc forward = boost::add_edge(static_cast<std::size_t>(from), static_cast<std::size_t>(to), graph_).first;
    const Arc backward = boost::add_edge(static_cast<std::size_t>(to), static_cast<std::size_t>(from), graph_).first;
    boost::put(boost::edge_capacity, graph_, forward, capacity);
    boost::put(boost::edge_capacity, graph_, backward, 0);
    boost::put(boost::edge_reverse, graph_, forward, backward);
    boost::put(boost::edge_reverse, graph_, backward, forward);
    return forward;
  }

  FlowGraph graph_;
  std::vector<long> excess_;
};

// Closed trail through every edge of the component of `start`, as edge ids.
std::vector<int> euler_circuit(int start, const std::vector<std::vector<std::pair<int, int>>>& adj, std::vector<bool>& used,
                               std::vector<std::size_t>& next) {
  std::vector<int> circuit;
  std::vector<std::pair<int, int>> stack{{start, -1}};
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& pos = next[static_cast<std::size_t>(v)];
    const auto& around = adj[static_cast<std::size_t>(v)];
    while (pos < around.size() && used[static_cast<std::size_t>(around[pos].second)]) ++pos;
    if (pos < around.size()) {
      const auto [w, id] = around[pos];
      used[static_cast<std::size_t>(id)] = true;
      stack.emplace_back(w, id);
    } else {
      if (stack.back().second >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  return circuit;
}

void require_no_isolated(const Multigraph& g, const char* op) {
  if (g.vertex_count() == 0 || g.has_isolated_vertex())
    throw PreconditionError(std::string(op) + ": graph has an isolated vertex");
}

}  // namespace

bool BoundReport::all_hold() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundRecord& b) { return b.holds; });
}

const BoundRecord* BoundReport::find(const std::string& name) const {
  const auto it = std::find_if(bounds.begin(), bounds.end(), [&](const BoundRecord& b) { return b.name == name; });
  return it == bounds.end() ? nullptr : &*it;
}

BoundReport bound_values(const Multigraph& g, const SearchLimits& limits) {
  require_no_isolated(g, "bound_values");
  BoundReport report;
  report.sp = sp_value(g, limits);
  report.max_degree = g.max_degree();
  report.min_degree = g.min_degree();
  report.matching_number = matching_number(g);
  const int top = report.max_degree, low = report.min_degree;
  auto add = [&](const char* name, int value) { report.bounds.push_back({name, value, report.sp <= value, report.sp == value}); };
  add("max_degree", top);
  add("degree_gap", top - low + 2);
  add("matching_deficiency", g.vertex_count() - 2 * report.matching_number + 1);
  add("degree_ratio", 1 + top / low);
  if (top != low) add("degree_ratio_nonregular", (top + low - 1) / low);
  if (top - low <= 1) add("almost_regular", 2);
  return report;
}

VertexPartition lovasz_partition(const Multigraph& g, int s, int t) {
  if (s < 1 || t < 1) throw InputError("lovasz_partition: s and t must be positive");
  if (g.max_degree() > s + t - 1) throw PreconditionError("lovasz_partition: Delta(G) > s + t - 1");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> on_l(n, false);
  // inside[v] = number of edge ends at v whose other end is on v's side.
  std::vector<int> inside(n);
  for (std::size_t v = 0; v < n; ++v) inside[v] = g.degree(static_cast<Vertex>(v));

  VertexPartition out;
  out.initial_potential = static_cast<long long>(t) * g.edge_count();
  for (;;) {
    Vertex bad = -1;
    for (std::size_t v = 0; v < n && bad < 0; ++v)
      if (inside[v] > (on_l[v] ? t : s)) bad = static_cast<Vertex>(v);
    if (bad < 0) break;
    const auto b = static_cast<std::size_t>(bad);
    for (EdgeId e : g.incident(bad)) {
      const auto w = static_cast<std::size_t>(g.edge(e).other(bad));
      inside[w] += on_l[w] == on_l[b] ? -1 : 1;
    }
    on_l[b] = !on_l[b];
    inside[b] = g.degree(bad) - inside[b];
    ++out.moves;
  }
  for (std::size_t v = 0; v < n; ++v) (on_l[v] ? out.l_side : out.h_side).push_back(static_cast<Vertex>(v));
  return out;
}

EdgePartition lovasz_edge_partition(const Multigraph& g, int s, int t) {
  if (s < 1 || t < 1) throw InputError("lovasz_edge_partition: s and t must be positive");
  if (g.max_degree() > s + t - 1) throw PreconditionError("lovasz_edge_partition: Delta(G) > s + t - 1");
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    lo[static_cast<std::size_t>(v)] = std::max(0, g.degree(v) - t);
    hi[static_cast<std::size_t>(v)] = std::min(g.degree(v), s);
  }

  // Nodes: v+ = v, v- = n + v, source 2n, sink 2n + 1.
  const int source = 2 * n, sink = 2 * n + 1;
  BoundedFlow flow(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    flow.add(source, v, lo[static_cast<std::size_t>(v)], hi[static_cast<std::size_t>(v)]);
    flow.add(n + v, sink, lo[static_cast<std::size_t>(v)], hi[static_cast<std::size_t>(v)]);
  }
  std::vector<std::pair<Arc, Arc>> copies;
  copies.reserve(static_cast<std::size_t>(m));
  for (const Edge& e : g.edges()) copies.emplace_back(flow.add(e.a, n + e.b, 0, 1), flow.add(e.b, n + e.a, 0, 1));
  flow.add(sink, source, 0, 2L * m + 1);
  if (!flow.feasible()) throw std::logic_error("lovasz_edge_partition: fractional solution has no integral counterpart");

  // Whole edges go to H; half edges are split evenly along Euler circuits.
  std::vector<bool> in_h(static_cast<std::size_t>(m), false);
  std::vector<int> taken(static_cast<std::size_t>(n), 0), half_degree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  std::vector<EdgeId> half_ids;
  for (EdgeId e = 0; e < m; ++e) {
    const long weight = flow.flow(copies[static_cast<std::size_t>(e)].first) + flow.flow(copies[static_cast<std::size_t>(e)].second);
    const Edge& ed = g.edge(e);
    if (weight == 2) {
      in_h[static_cast<std::size_t>(e)] = true;
      ++taken[static_cast<std::size_t>(ed.a)];
      ++taken[static_cast<std::size_t>(ed.b)];
    } else if (weight == 1) {
      const int id = static_cast<int>(half_ids.size());
      half_ids.push_back(e);
      adj[static_cast<std::size_t>(ed.a)].emplace_back(ed.b, id);
      adj[static_cast<std::size_t>(ed.b)].emplace_back(ed.a, id);
      ++half_degree[static_cast<std::size_t>(ed.a)];
      ++half_degree[static_cast<std::size_t>(ed.b)];
    }
  }
  const int real_halves = static_cast<int>(half_ids.size());
  for (Vertex v = 0; v < n; ++v) {
    if (half_degree[static_cast<std::size_t>(v)] % 2 == 0) continue;
    const int id = static_cast<int>(half_ids.size());
    half_ids.push_back(-1);
    adj[static_cast<std::size_t>(v)].emplace_back(n, id);
    adj[static_cast<std::size_t>(n)].emplace_back(v, id);
  }

  std::vector<bool> used(half_ids.size(), false);
  std::vector<std::size_t> next(adj.size(), 0);
  auto endpoints_of = [&](int id) -> std::pair<int, int> {
    if (id < real_halves) return {g.edge(half_ids[static_cast<std::size_t>(id)]).a, g.edge(half_ids[static_cast<std::size_t>(id)]).b};
    return {-1, -1};
  };
  // The dummy vertex n goes first so that its component starts there.
  std::vector<int> starts{n};
  for (Vertex v = 0; v < n; ++v) starts.push_back(v);
  for (int start : starts) {
    const auto circuit = euler_circuit(start, adj, used, next);
    if (circuit.empty()) continue;
    bool take = true;
    if (start < n && circuit.size() % 2 == 1) {
      // The start vertex ends up one above or one below its fractional degree.
      const auto r = static_cast<std::size_t>(start);
      take = taken[r] + half_degree[r] / 2 + 1 <= hi[r];
    }
    for (int id : circuit) {
      if (take && id < real_halves) {
        in_h[static_cast<std::size_t>(half_ids[static_cast<std::size_t>(id)])] = true;
        const auto [a, b] = endpoints_of(id);
        ++taken[static_cast<std::size_t>(a)];
        ++taken[static_cast<std::size_t>(b)];
      }
      take = !take;
    }
  }

  EdgePartition out{Subgraph(g), Subgraph(g)};
  std::vector<EdgeId> h_edges, l_edges;
  for (EdgeId e = 0; e < m; ++e) (in_h[static_cast<std::size_t>(e)] ? h_edges : l_edges).push_back(e);
  out.h = Subgraph(g, std::move(h_edges));
  out.l = Subgraph(g, std::move(l_edges));
  for (Vertex v = 0; v < n; ++v)
    if (out.h.degree(v) > s || out.l.degree(v) > t) throw std::logic_error("lovasz_edge_partition: rounding broke a degree bound");
  return out;
}

PartitionFactor factor_from_partition(const Multigraph& g) {
  require_no_isolated(g, "factor_from_partition");
  const int top = g.max_degree(), low = g.min_degree();
  if (low == 1) {
    std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) all[static_cast<std::size_t>(e)] = e;
    return {FactorWitness{Subgraph(g, std::move(all)), 1, top}, true};
  }
  const int s = top - low + 2;
  EdgePartition parts = lovasz_edge_partition(g, s, low - 1);
  FactorWitness factor{std::move(parts.h), 1, s};
  if (!is_factor(factor.subgraph, 1, s)) throw std::logic_error("factor_from_partition: H is not a [1, s]-factor");
  return {std::move(factor), false};
}

FactorConditionResult yu_liu_check(const Multigraph& g, int a, int b, const SearchLimits& limits) {
  if (a < 1 || b <= a) throw InputError("yu_liu_check: requires b > a >= 1");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n > limits.subset_vertices || n > 62) throw ResourceError("subset_vertices", limits.subset_vertices, n);
  const detail::BitGraph bits(g);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    long long lhs = 0;
    for (std::uint64_t rest = bits.all() & ~s; rest; rest &= rest - 1) {
      const int d = bits.degree_after(std::countr_zero(rest), s);
      if (d < a) lhs += a - d;
    }
    if (lhs > static_cast<long long>(b) * std::popcount(s)) return {false, detail::mask_to_vertices(s)};
  }
  return {};
}

HuntReport hunt_nonregular_improvement(const std::vector<Multigraph>& family, std::size_t budget, const SearchLimits& limits) {
  HuntReport report;
  for (std::size_t i = 0; i < family.size() && i < budget; ++i) {
    const Multigraph& g = family[i];
    if (g.vertex_count() == 0 || g.has_isolated_vertex() || g.is_regular()) {
      ++report.skipped;
      continue;
    }
    ++report.tested;
    if (sp_value(g, limits) > g.max_degree() - g.min_degree() + 1) report.violators.push_back(g);
  }
  return report;
}

}  // namespace spg
