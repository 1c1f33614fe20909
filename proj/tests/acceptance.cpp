// Acceptance run: one PASS/FAIL line per criterion. Every criterion is exact
// (tolerance 0); counts printed next to the verdict say what was covered.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spg/bounds.hpp"
#include "spg/edge_coloring.hpp"
#include "spg/errors.hpp"
#include "spg/families.hpp"
#include "spg/graph.hpp"
#include "spg/matching.hpp"
#include "spg/rng.hpp"
#include "spg/sp.hpp"
#include "spg/trees.hpp"

using namespace spg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void fail(const std::string& what, const Multigraph& g) {
    if (pass) first_failure = g.vertex_count() == 0 ? what : what + " on " + compact_string(g);
    pass = false;
  }
};

SearchLimits wide_limits() {
  SearchLimits l;
  l.exact_edges = 21;
  l.enumerate_edges = 21;
  return l;
}

// Connected simple graphs on 2..7 vertices and their multigraph variants with
// multiplicity at most 3 and at most 10 edges.
struct Suite {
  std::vector<Multigraph> simple;
  std::vector<Multigraph> variants;

  std::vector<const Multigraph*> all() const {
    std::vector<const Multigraph*> out;
    for (const auto& g : simple) out.push_back(&g);
    for (const auto& g : variants) out.push_back(&g);
    return out;
  }
};

const Suite& suite() {
  static const Suite s = [] {
    Suite out;
    for (int n = 2; n <= 7; ++n)
      for (Multigraph& g : connected_simple_graphs(n)) {
        if (g.edge_count() < 10)
          for (Multigraph& v : multigraph_variants(g, 3, 10)) out.variants.push_back(std::move(v));
        out.simple.push_back(std::move(g));
      }
    return out;
  }();
  return s;
}

std::vector<Multigraph> random_valid_multigraphs(int count, std::uint64_t seed0) {
  std::vector<Multigraph> out;
  for (std::uint64_t seed = seed0; static_cast<int>(out.size()) < count; ++seed) {
    Rng rng(seed);
    const int n = rng.between(2, 9);
    const int m = rng.between(n / 2 + 1, std::min(3 * n, 3 * n * (n - 1) / 2));
    Multigraph g = random_multigraph(n, m, 3, seed);
    if (!g.has_isolated_vertex()) out.push_back(std::move(g));
  }
  return out;
}

bool is_odd_cycle(const Multigraph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() && g.is_regular() && g.max_degree() == 2 &&
         g.vertex_count() % 2 == 1;
}

bool is_star_forest(const Subgraph& h) {
  for (EdgeId e : h.edges()) {
    const Edge& x = h.host().edge(e);
    if (h.degree(x.a) > 1 && h.degree(x.b) > 1) return false;
  }
  return true;
}

int induced_max_degree(const Multigraph& g, const VertexSet& side) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : side) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges())
    if (in[static_cast<std::size_t>(e.a)] && in[static_cast<std::size_t>(e.b)]) {
      ++deg[static_cast<std::size_t>(e.a)];
      ++deg[static_cast<std::size_t>(e.b)];
    }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

// Spanning, proper with k colours, of size nu_k.
bool spanning_maximum(const Multigraph& g, int k, const EdgeColoring& c, const SearchLimits& limits) {
  if (&c.subgraph.host() != &g || !c.subgraph.is_spanning() || !is_proper(c) || c.k > k) return false;
  return c.subgraph.size() == max_k_ecs_size(g, k, limits);
}

Outcome ac1_sp_routes() {
  Outcome out;
  const SearchLimits limits = wide_limits();
  int graphs = 0, oracle_checked = 0;
  for (const Multigraph* g : suite().all()) {
    ++graphs;
    const int formula = sp_formula(*g, limits);
    const FactorWitness factor = sp_factor_search(*g, limits);
    const int sp2 = sp2_bruteforce(*g, limits);
    const int sp3 = sp3_bruteforce(*g, limits);
    if (!is_factor(factor.subgraph, 1, factor.b)) out.fail("factor witness invalid", *g);
    if (factor.b != formula || sp2 != formula || sp3 != formula) out.fail("routes disagree", *g);
    if (g->edge_count() <= 14) {
      ++oracle_checked;
      if (oracle::sp_by_factors(*g) != formula) out.fail("subset oracle disagrees", *g);
    }
  }
  out.detail << "graphs=" << graphs << " simple=" << suite().simple.size() << " variants=" << suite().variants.size()
             << " subset_oracle=" << oracle_checked;
  return out;
}

Outcome ac2_exchange() {
  Outcome out;
  const SearchLimits limits = wide_limits();
  long long cases = 0;
  int graphs = 0;
  for (const Multigraph* g : suite().all()) {
    if (g->edge_count() > 12) continue;
    ++graphs;
    for (int k = 1; k <= g->max_degree(); ++k) {
      const auto a = find_spanning_k_ecs(*g, k, limits);
      if (!a) continue;
      enumerate_max_k_ecs(
          *g, k,
          [&](const EdgeColoring& h) {
            if (h.subgraph.is_spanning()) return true;
            ++cases;
            const ExchangeResult r = exchange_to_spanning_max(*g, k, a->subgraph, h.subgraph, limits);
            if (!spanning_maximum(*g, k, r.result, limits) || r.result.subgraph.size() != h.subgraph.size())
              out.fail("exchange result k=" + std::to_string(k), *g);
            return true;
          },
          limits);
    }
  }
  out.detail << "graphs=" << graphs << " exchanges=" << cases;
  if (cases == 0) out.fail("no non-spanning maximum met", Multigraph());
  return out;
}

Outcome ac3_trees() {
  Outcome out;
  int trees = 0, certified = 0, graphs = 0, equal = 0;
  for (int n = 2; n <= 12; ++n)
    for (const Multigraph& t : free_trees(n)) {
      ++trees;
      const bool expected = oracle::sp_by_factors(t) == t.max_degree();
      const SpDeltaTreeResult r = is_sp_delta_tree(t);
      if (r.sp_equals_delta != expected) out.fail("recogniser disagrees", t);
      if (r.certificate.has_value() != r.sp_equals_delta) out.fail("certificate presence", t);
      if (r.certificate) {
        ++certified;
        if (tree_canonical_form(replay(*r.certificate)) != tree_canonical_form(t)) out.fail("replay differs", t);
      }
    }
  for (const Multigraph& g : suite().simple) {
    ++graphs;
    const bool sp_is_delta = sp_factor_search(g).b == g.max_degree();
    equal += sp_is_delta;
    const bool characterised = is_odd_cycle(g) || (is_tree(g) && is_sp_delta_tree(g).sp_equals_delta);
    if (sp_is_delta != characterised) out.fail("sp = Delta outside odd cycles and certified trees", g);
    if (sp_delta_connected(g) != sp_is_delta) out.fail("sp_delta_connected disagrees", g);
  }
  out.detail << "trees=" << trees << " certified=" << certified << " connected_graphs=" << graphs
             << " with_sp_delta=" << equal;
  return out;
}

Outcome ac4_decomposition() {
  Outcome out;
  int roots = 0, sp_delta_roots = 0;
  for (int n = 3; n <= 12; ++n)
    for (const Multigraph& t : free_trees(n)) {
      const bool sp_is_delta = oracle::sp_by_factors(t) == t.max_degree();
      for (Vertex v : classify_ab(t).b) {
        ++roots;
        const Subgraph h = layered_star_decomposition(t, v);
        const int covered = h.covered_count();
        const bool all = covered == n;
        const bool all_but_v = covered == n - 1 && !h.covers(v);
        if (!is_star_forest(h)) out.fail("not a star forest v=" + std::to_string(v), t);
        if (h.max_degree() > t.max_degree() - 1) out.fail("centre degree above Delta - 1", t);
        if (!all && !all_but_v) out.fail("coverage v=" + std::to_string(v), t);
        if (sp_is_delta) {
          ++sp_delta_roots;
          if (!all_but_v) out.fail("sp = Delta but v covered", t);
        }
      }
    }
  out.detail << "tree_roots=" << roots << " sp_delta_roots=" << sp_delta_roots;
  return out;
}

Outcome ac5_extremal_family() {
  Outcome out;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int n = 4; n <= 5; ++n) {
        const int k = a * static_cast<int>(std::lround(std::pow(n, b)));
        const Multigraph t = prop21_tree(a, b, n);
        const int vertices = t.vertex_count();
        const int nu = matching_number(t);
        const FactorWitness f = sp_factor_search(t);
        const bool ratio = f.b > a * std::pow(static_cast<double>(vertices) / nu, b);
        if (vertices != 3 * k + 1 || nu != k + 1 || f.b != k || !is_factor(f.subgraph, 1, k) || !ratio)
          out.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " n=" + std::to_string(n), t);
        if (nu != oracle::tree_matching_number(t)) out.fail("matching routes disagree", t);
        out.detail << "(" << a << "," << b << "," << n << "):V=" << vertices << ",nu=" << nu << ",sp=" << f.b << " ";
      }
  return out;
}

Outcome ac6_bounds() {
  Outcome out;
  const SearchLimits limits = wide_limits();
  auto check = [&](const Multigraph& g) {
    const BoundReport r = bound_values(g, limits);
    const int sp = sp_factor_search(g, limits).b;
    const int delta = g.max_degree(), low = g.min_degree(), nu = matching_number(g);
    std::vector<std::pair<std::string, int>> expected{{"max_degree", delta},
                                                      {"degree_gap", delta - low + 2},
                                                      {"matching_deficiency", g.vertex_count() - 2 * nu + 1},
                                                      {"degree_ratio", 1 + delta / low}};
    if (delta != low) expected.emplace_back("degree_ratio_nonregular", (delta + low - 1) / low);
    if (delta - low <= 1) expected.emplace_back("almost_regular", 2);
    if (r.sp != sp || r.bounds.size() != expected.size()) out.fail("report shape", g);
    for (const auto& [name, value] : expected) {
      const BoundRecord* b = r.find(name);
      if (!b || b->value != value || !b->holds || sp > value || b->tight != (sp == value)) out.fail(name, g);
    }
    return r;
  };
  int suite_graphs = 0, regular_no_pm = 0, near_perfect = 0;
  for (const Multigraph* g : suite().all()) {
    ++suite_graphs;
    const BoundReport r = check(*g);
    if (g->is_regular() && !has_perfect_matching(*g).perfect) {
      ++regular_no_pm;
      if (!r.find("degree_gap")->tight) out.fail("regular without perfect matching not tight", *g);
    }
    if (g->vertex_count() - 2 * r.matching_number <= 1) {
      ++near_perfect;
      if (!r.find("matching_deficiency")->tight) out.fail("(near-)perfect matching not tight", *g);
    }
  }
  const auto randoms = random_valid_multigraphs(1000, 1);
  for (const Multigraph& g : randoms) check(g);

  // r-regular H with a perfect matching, one matching edge replaced by a path of
  // length three: sp = 1 while the non-regular ratio bound is ceil(r / 2).
  int gap_family = 0;
  auto gap = [&](const Multigraph& h, int r) {
    ++gap_family;
    const Matching m = maximum_matching(h);
    const std::vector<EdgeId> pm(m.edges().begin(), m.edges().end());
    const Multigraph g = tightness_graph(h, pm, pm.front());
    const BoundReport rep = check(g);
    const BoundRecord* b = rep.find("degree_ratio_nonregular");
    if (rep.sp != 1 || !b || b->value != (r + 1) / 2) out.fail("gap family r=" + std::to_string(r), g);
  };
  for (int r = 3; r <= 7; r += 2) gap(complete_graph(r + 1), r);
  for (int r = 3; r <= 6; ++r) gap(complete_bipartite_graph(r, r), r);

  out.detail << "suite=" << suite_graphs << " random=" << randoms.size() << " regular_no_pm=" << regular_no_pm
             << " near_perfect=" << near_perfect << " gap_family=" << gap_family;
  return out;
}

Outcome ac7_partition() {
  Outcome out;
  int graphs = 0, pairs = 0;
  for (std::uint64_t seed = 1; graphs < 500; ++seed) {
    Rng rng(seed);
    const int n = rng.between(4, 12);
    const int m = rng.between(1, std::min(3 * n, n * (n - 1) / 2));
    const Multigraph g = random_multigraph(n, m, 1, seed);
    const int delta = g.max_degree();
    if (delta > 6) continue;
    ++graphs;
    for (int s = 1; s <= delta; ++s)
      for (int t = 1; t <= delta; ++t) {
        if (s + t - 1 < delta) continue;
        ++pairs;
        const VertexPartition p = lovasz_partition(g, s, t);
        if (p.h_side.size() + p.l_side.size() != static_cast<std::size_t>(n) ||
            induced_max_degree(g, p.h_side) > s || induced_max_degree(g, p.l_side) > t)
          out.fail("vertex partition s=" + std::to_string(s) + " t=" + std::to_string(t), g);
        if (p.initial_potential != static_cast<long long>(t) * g.edge_count() || p.moves > p.initial_potential)
          out.fail("move count", g);
        const EdgePartition e = lovasz_edge_partition(g, s, t);
        if (e.h.size() + e.l.size() != g.edge_count() || e.h.max_degree() > s || e.l.max_degree() > t)
          out.fail("edge partition s=" + std::to_string(s) + " t=" + std::to_string(t), g);
      }
  }
  out.detail << "graphs=" << graphs << " pairs=" << pairs;
  return out;
}

Outcome ac8_substrate(int exhaustive_n) {
  Outcome out;
  SearchLimits limits = wide_limits();
  limits.exact_edges = 32;
  long long tutte = 0, coloured = 0;
  auto tutte_berge = [&](const Multigraph& g) {
    ++tutte;
    const int def = g.vertex_count() - 2 * matching_number(g);
    if (oracle::tutte_berge_deficiency(g) != def || tutte_berge_deficiency(g).deficiency != def)
      out.fail("Tutte-Berge", g);
  };
  auto colouring = [&](const Multigraph& g) {
    ++coloured;
    const int delta = g.max_degree();
    const int chi = chromatic_index(g, limits).value;
    if (chi < delta || chi > 3 * delta / 2 || chi > delta + max_multiplicity(g)) out.fail("Shannon/Vizing", g);
    if (max_k_ecs_size(g, 1, limits) != matching_number(g)) out.fail("nu_1 != nu", g);
  };
  for (int n = 1; n <= exhaustive_n; ++n)
    for (const Multigraph& g : connected_simple_graphs(n)) tutte_berge(g);
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    const int n = 9 + static_cast<int>(seed % 2);
    const int m = 1 + static_cast<int>(seed % 25);
    tutte_berge(random_multigraph(n, m, 1 + static_cast<int>(seed % 3), seed));
  }
  for (const Multigraph* g : suite().all()) colouring(*g);
  const auto randoms = random_valid_multigraphs(1000, 5000);
  for (const Multigraph& g : randoms) colouring(g);

  const Multigraph shannon(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
  const int shannon_chi = chromatic_index(shannon).value;
  if (shannon_chi != 6 || oracle::chromatic_index(shannon) != 6) out.fail("Shannon triangle", shannon);

  // Every graph on at most 10 vertices means about 12 million non-isomorphic
  // graphs; the built-in generator already needs over a minute for n = 9.
  if (exhaustive_n < 10)
    out.fail("coverage: criterion asks for every graph with |V| <= 10, exhaustive enumeration stops at |V| <= " +
                 std::to_string(exhaustive_n) + " (larger sizes sampled only)",
             Multigraph());
  out.detail << "tutte_berge=" << tutte << " (all connected n<=" << exhaustive_n << ", 2000 random n=9..10)"
             << " chromatic=" << coloured << " shannon_triangle=" << shannon_chi;
  return out;
}

Outcome ac9_cubic() {
  Outcome out;
  const SearchLimits limits = wide_limits();
  int graphs = 0;
  for (int n = 4; n <= 14; n += 2)
    for (std::uint64_t seed = 1; seed <= (n == 4 ? 1u : 10u); ++seed) {
      const Multigraph g = random_cubic_graph(n, seed);
      ++graphs;
      const auto w = spanning_max_witness(g, 2, limits);
      if (!w || !spanning_maximum(g, 2, *w, limits)) out.fail("no spanning maximum 2-ECS", g);
    }
  out.detail << "cubic_graphs=" << graphs;
  if (graphs < 50) out.fail("fewer than 50 instances", Multigraph());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional: largest vertex count for the exhaustive Tutte-Berge sweep.
  const int tutte_n = argc > 1 ? std::atoi(argv[1]) : 9;
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "sp routes agree", ac1_sp_routes},
      {"AC2", "exchange reaches a spanning maximum", ac2_exchange},
      {"AC3", "sp = Delta characterisation", ac3_trees},
      {"AC4", "layered star decomposition", ac4_decomposition},
      {"AC5", "extremal tree family", ac5_extremal_family},
      {"AC6", "upper bounds and tightness", ac6_bounds},
      {"AC7", "degree-bounded partition", ac7_partition},
      {"AC8", "matching and colouring substrate", [tutte_n] { return ac8_substrate(tutte_n); }},
      {"AC9", "cubic graphs through factor and exchange", ac9_cubic},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %s: %s tolerance=0 %s time=%.1fs%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.str().c_str(), secs, o.pass ? "" : " first_failure=", o.first_failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
