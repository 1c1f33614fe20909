#include "spg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "spg/bounds.hpp"
#include "spg/edge_coloring.hpp"
#include "spg/errors.hpp"
#include "spg/families.hpp"
#include "spg/matching.hpp"
#include "spg/sp.hpp"
#include "spg/trees.hpp"

namespace spg {

namespace {

// Result of one check: empty detail on success, reason otherwise.
struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail.str("");
    ok = false;
    detail << why;
  }
};

bool usable(const Multigraph& g) { return g.vertex_count() > 0 && !g.has_isolated_vertex(); }

std::string edge_list(const Subgraph& h) {
  std::string out;
  for (EdgeId e : h.edges()) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out.empty() ? "-" : out;
}

// Star forest: acyclic and every edge has an end of degree one.
bool is_star_forest(const Subgraph& h) {
  const Multigraph& g = h.host();
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (EdgeId e : h.edges()) {
    const Edge& ed = g.edge(e);
    const Vertex x = find(ed.a), y = find(ed.b);
    if (x == y) return false;
    parent[static_cast<std::size_t>(x)] = y;
    if (h.degree(ed.a) != 1 && h.degree(ed.b) != 1) return false;
  }
  return true;
}

bool is_odd_cycle(const Multigraph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() && g.max_degree() == 2 && g.min_degree() == 2 &&
         g.vertex_count() % 2 == 1;
}

std::optional<Outcome> check_equality(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g)) return std::nullopt;
  Outcome out;
  const int formula = sp_formula(g, limits);
  const FactorWitness factor = sp_factor_search(g, limits);
  const int spanning = sp2_bruteforce(g, limits);
  const int spanning_max = sp3_bruteforce(g, limits);
  out.detail << "formula=" << formula << ";factor=" << factor.b << ";spanning=" << spanning << ";spanning_max=" << spanning_max;
  if (!is_factor(factor.subgraph, 1, factor.b)) out.fail("factor_witness_invalid=" + edge_list(factor.subgraph));
  if (formula != factor.b || formula != spanning || formula != spanning_max) out.ok = false;
  return out;
}

std::optional<Outcome> check_exchange(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g) || g.edge_count() > 12) return std::nullopt;
  Outcome out;
  int cases = 0;
  for (int k = 1; k <= g.max_degree() && out.ok; ++k) {
    const auto a = find_spanning_k_ecs(g, k, limits);
    if (!a) continue;
    const int nu_k = max_k_ecs_size(g, k, limits);
    enumerate_max_k_ecs(
        g, k,
        [&](const EdgeColoring& h) {
          if (h.subgraph.is_spanning()) return true;
          ++cases;
          const ExchangeResult r = exchange_to_spanning_max(g, k, a->subgraph, h.subgraph, limits);
          if (!r.result.subgraph.is_spanning() || r.result.subgraph.size() != nu_k || !is_proper(r.result)) {
            out.fail("k=" + std::to_string(k) + ";A=" + edge_list(a->subgraph) + ";H=" + edge_list(h.subgraph) +
                     ";result=" + edge_list(r.result.subgraph));
            return false;
          }
          return true;
        },
        limits);
  }
  if (out.ok) out.detail << "cases=" << cases;
  return out;
}

std::optional<Outcome> check_sp_delta(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g)) return std::nullopt;
  Outcome out;
  const int sp = sp_value(g, limits);
  const bool equal = sp == g.max_degree();
  out.detail << "sp=" << sp << ";delta=" << g.max_degree();
  if (sp_delta(g) != equal) out.fail("structural_rule_disagrees;sp=" + std::to_string(sp));
  if (is_tree(g)) {
    const SpDeltaTreeResult r = is_sp_delta_tree(g);
    if (r.sp_equals_delta != equal) out.fail("recogniser=" + std::to_string(r.sp_equals_delta) + ";sp=" + std::to_string(sp));
    if (r.certificate && tree_canonical_form(replay(*r.certificate)) != tree_canonical_form(g))
      out.fail("certificate_replay_mismatch");
  } else if (is_connected(g) && equal && !is_odd_cycle(g)) {
    out.fail("sp_equals_delta_on_non_tree_non_odd_cycle");
  }
  return out;
}

std::optional<Outcome> check_decomposition(const Multigraph& g, const SearchLimits& limits) {
  if (!is_tree(g) || g.vertex_count() < 3) return std::nullopt;
  Outcome out;
  const int top = g.max_degree();
  const bool equal = sp_value(g, limits) == top;
  int roots = 0;
  for (Vertex v : classify_ab(g).b) {
    ++roots;
    const Subgraph h = layered_star_decomposition(g, v);
    const std::string at = "v=" + std::to_string(v) + ";H=" + edge_list(h);
    if (!is_star_forest(h)) out.fail("not_star_forest;" + at);
    if (h.max_degree() > top - 1) out.fail("centre_degree_above_delta_minus_one;" + at);
    const int covered = h.covered_count();
    const bool all = covered == g.vertex_count();
    const bool all_but_v = covered == g.vertex_count() - 1 && !h.covers(v);
    if (!all && !all_but_v) out.fail("coverage;" + at);
    if (equal && !all_but_v) out.fail("sp_equals_delta_but_v_covered;" + at);
    if (all_but_v) {
      const Subgraph extended = extend_to_spanning_delta(g, v, h);
      const EdgeColoring colouring = color_forest(extended);
      if (!extended.is_spanning() || extended.degree(v) != 1 || colouring.k > top || !is_proper(colouring))
        out.fail("extension;" + at);
    }
  }
  if (out.ok) out.detail << "roots=" << roots;
  return out;
}

std::optional<Outcome> check_operprop(const Multigraph& g, const SearchLimits& limits) {
  if (!is_tree(g) || g.vertex_count() < 3) return std::nullopt;
  Outcome out;
  int cases = 0;
  for (Vertex v : classify_ab(g).b) {
    for (int p = 2; p <= g.max_degree() + 1; ++p) {
      const OperPropCase c = operprop_case_of(g, p, limits);
      ++cases;
      if (!verify_operprop_case(g, p, v, c, limits))
        out.fail("v=" + std::to_string(v) + ";p=" + std::to_string(p) + ";case=" + std::string(1, "abcd"[static_cast<int>(c)]));
    }
  }
  if (out.ok) out.detail << "cases=" << cases;
  return out;
}

std::optional<Outcome> check_bounds(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g)) return std::nullopt;
  Outcome out;
  const BoundReport report = bound_values(g, limits);
  out.detail << "sp=" << report.sp;
  if (report.sp < 1) out.fail("sp_below_one");
  for (const BoundRecord& b : report.bounds)
    if (!b.holds) out.fail(b.name + "=" + std::to_string(b.value) + ";sp=" + std::to_string(report.sp));
  const int n = g.vertex_count();
  const bool perfect = 2 * report.matching_number == n;
  if (g.is_regular() && is_connected(g) && !perfect && !(report.sp == 2 && report.find("degree_gap")->tight))
    out.fail("regular_without_perfect_matching_not_tight;sp=" + std::to_string(report.sp));
  if (n - 2 * report.matching_number <= 1 && !report.find("matching_deficiency")->tight)
    out.fail("near_perfect_matching_not_tight;sp=" + std::to_string(report.sp));
  if (static_cast<std::size_t>(n) <= limits.subset_vertices) {
    for (int b = 2; b <= std::max(2, g.max_degree()); ++b) {
      const bool holds = yu_liu_check(g, 1, b, limits).holds;
      if (holds != (b >= report.sp)) out.fail("yu_liu_disagrees;b=" + std::to_string(b));
    }
  }
  return out;
}

std::optional<Outcome> check_partition(const Multigraph& g, const SearchLimits&) {
  if (g.edge_count() == 0) return std::nullopt;
  Outcome out;
  const int top = g.max_degree();
  int pairs = 0;
  for (int s = 1; s <= top; ++s) {
    for (int t = 1; t <= top; ++t) {
      if (top > s + t - 1) continue;
      ++pairs;
      const std::string at = "s=" + std::to_string(s) + ";t=" + std::to_string(t);
      const VertexPartition vp = lovasz_partition(g, s, t);
      const Multigraph h = delete_vertices(g, vp.l_side).graph;
      const Multigraph l = delete_vertices(g, vp.h_side).graph;
      if (h.vertex_count() > 0 && h.max_degree() > s) out.fail("vertex_h_side;" + at);
      if (l.vertex_count() > 0 && l.max_degree() > t) out.fail("vertex_l_side;" + at);
      if (vp.moves > vp.initial_potential) out.fail("moves_exceed_potential;" + at);
      const EdgePartition ep = lovasz_edge_partition(g, s, t);
      if (ep.h.size() + ep.l.size() != g.edge_count() || ep.h.max_degree() > s || ep.l.max_degree() > t)
        out.fail("edge_partition;" + at);
    }
  }
  if (usable(g)) {
    const PartitionFactor pf = factor_from_partition(g);
    const int bound = pf.fallback ? top : top - g.min_degree() + 2;
    if (!is_factor(pf.factor.subgraph, 1, bound)) out.fail("factor_from_partition=" + edge_list(pf.factor.subgraph));
  }
  if (out.ok) out.detail << "pairs=" << pairs;
  return out;
}

std::optional<Outcome> check_substrate(const Multigraph& g, const SearchLimits& limits) {
  Outcome out;
  const Matching m = maximum_matching(g);
  const int nu = m.size(), n = g.vertex_count();
  out.detail << "nu=" << nu;
  if (!is_matching(m)) out.fail("matching_invalid=" + edge_list(m));
  if (n <= 10) {
    const int deficiency = tutte_berge_deficiency(g, limits).deficiency;
    if (deficiency != n - 2 * nu) out.fail("tutte_berge;deficiency=" + std::to_string(deficiency) + ";nu=" + std::to_string(nu));
    if (has_perfect_matching(g).perfect != (deficiency == 0)) out.fail("perfect_matching_vs_deficiency");
  }
  if (static_cast<std::size_t>(g.edge_count()) <= limits.exact_edges) {
    const ChromaticIndexResult chi = chromatic_index(g, limits);
    const int top = g.max_degree();
    if (chi.value < top || chi.value > std::max(top, 3 * top / 2) || chi.value > top + max_multiplicity(g) ||
        !is_proper(chi.witness) || chi.witness.subgraph.size() != g.edge_count())
      out.fail("chromatic_index=" + std::to_string(chi.value));
    if (g.edge_count() > 0 && max_k_ecs_size(g, 1, limits) != nu) out.fail("nu_1_differs_from_nu");
    out.detail << ";chromatic_index=" << chi.value;
  }
  return out;
}

std::optional<Outcome> check_regular(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g) || !g.is_regular()) return std::nullopt;
  Outcome out;
  const auto witness = spanning_max_witness(g, 2, limits);
  if (!witness) {
    out.fail("no_spanning_maximum_2_ecs");
  } else if (!witness->subgraph.is_spanning() || !is_proper(*witness) || witness->subgraph.size() != max_k_ecs_size(g, 2, limits)) {
    out.fail("witness_invalid=" + edge_list(witness->subgraph));
  } else {
    out.detail << "size=" << witness->subgraph.size();
  }
  return out;
}

std::optional<Outcome> check_edge_deletion(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g)) return std::nullopt;
  Outcome out;
  const int sp = sp_value(g, limits);
  const auto components = component_profile(g).components.size();
  int tried = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<Edge> rest;
    for (EdgeId f = 0; f < g.edge_count(); ++f)
      if (f != e) rest.push_back(g.edge(f));
    const Multigraph smaller(g.vertex_count(), rest);
    if (component_profile(smaller).components.size() != components || smaller.has_isolated_vertex()) continue;
    ++tried;
    const int after = sp_value(smaller, limits);
    if (sp > after) out.fail("e=" + std::to_string(e) + ";sp=" + std::to_string(sp) + ";sp_without_e=" + std::to_string(after));
  }
  if (out.ok) out.detail << "cycle_edges=" << tried;
  return out;
}

std::optional<Outcome> check_prop21(const Instance& instance, const SearchLimits& limits) {
  if (!instance.prop21) return std::nullopt;
  const auto [a, b, n] = *instance.prop21;
  const Multigraph& g = instance.graph;
  const long k = a * std::lround(std::pow(n, b));
  Outcome out;
  const int vertices = g.vertex_count(), nu = matching_number(g);
  SearchLimits wide = limits;
  wide.factor_edges = std::max<std::size_t>(wide.factor_edges, static_cast<std::size_t>(g.edge_count()));
  const int sp = sp_factor_search(g, wide).b;
  out.detail << "vertices=" << vertices << ";nu=" << nu << ";sp=" << sp;
  if (vertices != 3 * k + 1 || nu != k + 1 || sp != k) out.ok = false;
  if (!(sp > a * std::pow(static_cast<double>(vertices) / nu, b))) out.fail("ratio_bound_not_exceeded");
  return out;
}

std::optional<Outcome> check_hunt(const Multigraph& g, const SearchLimits& limits) {
  if (!usable(g) || g.is_regular()) return std::nullopt;
  Outcome out;
  const int sp = sp_value(g, limits), bound = g.max_degree() - g.min_degree() + 1;
  out.detail << "sp=" << sp << ";improved_bound=" << bound;
  if (sp > bound) out.ok = false;
  return out;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Capped: return "capped";
    case Status::Note: return "note";
  }
  return "";
}

int VerificationReport::count(Status s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [s](const Record& r) { return r.status == s; }));
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"equality", "exchange",  "sp_delta",  "decomposition",
                                              "operprop", "bounds",    "partition", "substrate",
                                              "regular",  "edge_deletion", "prop21", "nonregular_hunt"};
  return names;
}

std::vector<Instance> campaign_family(const CampaignOptions& options) {
  std::vector<Instance> out;
  auto add = [&](std::string label, Multigraph g) { out.push_back({std::move(label), std::move(g), std::nullopt}); };
  if (options.family == "exhaustive" || options.family == "multigraph") {
    for (int n = 2; n <= options.max_n; ++n) {
      for (const Multigraph& g : connected_simple_graphs(n)) {
        if (g.edge_count() > options.max_edges) continue;
        if (options.family == "exhaustive") {
          add(compact_string(g), g);
        } else {
          for (Multigraph& h : multigraph_variants(g, 3, options.max_edges)) add(compact_string(h), std::move(h));
        }
      }
    }
  } else if (options.family == "random") {
    for (int i = 0; i < options.count; ++i) {
      const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
      add("random(n=" + std::to_string(options.max_n) + ",m=" + std::to_string(options.max_edges) + ",mu=3,seed=" + std::to_string(seed) + ")",
          random_multigraph(options.max_n, options.max_edges, 3, seed));
    }
  } else if (options.family == "trees") {
    for (int n = 2; n <= options.max_n; ++n)
      for (Multigraph& t : free_trees(n)) add(compact_string(t), std::move(t));
  } else if (options.family == "generated") {
    for (int a : {1, 2})
      for (int b : {1, 2})
        for (int n : {4, 5})
          out.push_back({"prop21(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",n=" + std::to_string(n) + ")",
                         prop21_tree(a, b, n), std::make_tuple(a, b, n)});
    auto tightness = [&](const std::string& name, const Multigraph& h) {
      const Matching m = maximum_matching(h);
      const std::vector<EdgeId> pm(m.edges().begin(), m.edges().end());
      add("tightness(base=" + name + ",f=" + std::to_string(pm.front()) + ")", tightness_graph(h, pm, pm.front()));
    };
    tightness("K4", complete_graph(4));
    tightness("K6", complete_graph(6));
    for (int r = 2; r <= 5; ++r) tightness("K" + std::to_string(r) + "," + std::to_string(r), complete_bipartite_graph(r, r));
    for (int i = 0; i < options.count; ++i) {
      const int n = 4 + 2 * (i % std::max(1, (options.max_n - 2) / 2));
      const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
      add("cubic(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")", random_cubic_graph(n, seed));
    }
  } else {
    throw InputError("unknown family '" + options.family + "' (exhaustive, multigraph, random, trees, generated)");
  }
  return out;
}

std::optional<Record> check_theorem(const std::string& theorem, const Instance& instance, const SearchLimits& limits) {
  if (std::find(theorem_names().begin(), theorem_names().end(), theorem) == theorem_names().end())
    throw InputError("unknown theorem '" + theorem + "'");
  const Multigraph& g = instance.graph;
  Record record;
  record.label = instance.label;
  record.graph = compact_string(g);
  record.theorem = theorem;
  try {
    std::optional<Outcome> outcome;
    if (theorem == "equality") outcome = check_equality(g, limits);
    else if (theorem == "exchange") outcome = check_exchange(g, limits);
    else if (theorem == "sp_delta") outcome = check_sp_delta(g, limits);
    else if (theorem == "decomposition") outcome = check_decomposition(g, limits);
    else if (theorem == "operprop") outcome = check_operprop(g, limits);
    else if (theorem == "bounds") outcome = check_bounds(g, limits);
    else if (theorem == "partition") outcome = check_partition(g, limits);
    else if (theorem == "substrate") outcome = check_substrate(g, limits);
    else if (theorem == "regular") outcome = check_regular(g, limits);
    else if (theorem == "edge_deletion") outcome = check_edge_deletion(g, limits);
    else if (theorem == "prop21") outcome = check_prop21(instance, limits);
    else outcome = check_hunt(g, limits);
    if (!outcome) return std::nullopt;
    record.detail = outcome->detail.str();
    if (theorem == "nonregular_hunt") record.status = outcome->ok ? Status::Pass : Status::Note;
    else record.status = outcome->ok ? Status::Pass : Status::Fail;
  } catch (const ResourceError& e) {
    record.status = Status::Capped;
    record.detail = "cap=" + e.cap();
  } catch (const std::exception& e) {
    record.status = Status::Fail;
    record.detail = "exception=" + std::string(e.what());
    std::replace(record.detail.begin(), record.detail.end(), ' ', '_');
  }
  return record;
}

VerificationReport run_campaign(const CampaignOptions& options) {
  std::vector<std::string> theorems = options.theorems.empty() ? theorem_names() : options.theorems;
  for (const std::string& t : theorems)
    if (std::find(theorem_names().begin(), theorem_names().end(), t) == theorem_names().end())
      throw InputError("unknown theorem '" + t + "'");
  const std::vector<Instance> family = campaign_family(options);

  std::vector<std::vector<Record>> per_instance(family.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < family.size(); i = next++) {
      for (const std::string& t : theorems) {
        if (auto r = check_theorem(t, family[i], options.limits)) {
          r->index = i;
          per_instance[i].push_back(std::move(*r));
        }
      }
    }
  };
  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, family.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  VerificationReport report;
  report.campaign = options.family;
  report.options = options;
  report.options.theorems = theorems;
  for (auto& records : per_instance)
    for (Record& r : records) report.records.push_back(std::move(r));
  return report;
}

std::string format_report(const VerificationReport& report) {
  const CampaignOptions& o = report.options;
  std::ostringstream out;
  out << "campaign=" << report.campaign << " seed=" << o.seed << " max_n=" << o.max_n << " max_edges=" << o.max_edges
      << " count=" << o.count << " theorems=";
  for (std::size_t i = 0; i < o.theorems.size(); ++i) out << (i ? "," : "") << o.theorems[i];
  out << " caps=subset_vertices:" << o.limits.subset_vertices << ",exact_edges:" << o.limits.exact_edges
      << ",enumerate_edges:" << o.limits.enumerate_edges << ",factor_edges:" << o.limits.factor_edges << "\n";
  for (const Record& r : report.records) {
    out << "record index=" << r.index << " label=" << r.label << " graph=" << r.graph << " theorem=" << r.theorem
        << " status=" << to_string(r.status) << " detail=" << (r.detail.empty() ? "-" : r.detail) << "\n";
  }
  out << "summary records=" << report.records.size() << " pass=" << report.count(Status::Pass)
      << " fail=" << report.count(Status::Fail) << " capped=" << report.count(Status::Capped)
      << " note=" << report.count(Status::Note) << "\n";
  return out.str();
}

}  // namespace spg
