// spgraph: compute sp(G) with witnesses, run verification campaigns, generate graph families.
//
// Exit codes: 0 success, 1 theorem violation, 2 usage or parse error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spg/bounds.hpp"
#include "spg/edge_coloring.hpp"
#include "spg/errors.hpp"
#include "spg/io.hpp"
#include "spg/matching.hpp"
#include "spg/sp.hpp"
#include "spg/verify.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw spg::InputError("cannot open output file " + output);
  file << text;
}

std::string edges_of(const spg::Subgraph& h) {
  std::string out;
  for (spg::EdgeId e : h.edges()) out += (out.empty() ? "" : ",") + std::to_string(e);
  return out.empty() ? "-" : out;
}

std::string compute_report(const spg::Multigraph& g, bool witnesses, const spg::SearchLimits& limits) {
  std::ostringstream out;
  out << "graph=" << spg::compact_string(g) << "\n";
  out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << "\n";
  out << "max_degree=" << g.max_degree() << " min_degree=" << g.min_degree()
      << " multiplicity=" << spg::max_multiplicity(g) << "\n";
  out << "matching_number=" << spg::matching_number(g) << "\n";
  out << "chromatic_index=" << spg::chromatic_index(g, limits).value << "\n";
  if (g.vertex_count() == 0 || g.has_isolated_vertex()) {
    out << "sp=undefined reason=isolated_vertex\n";
    return out.str();
  }
  const spg::BoundReport bounds = spg::bound_values(g, limits);
  out << "sp=" << bounds.sp << "\n";
  for (const spg::BoundRecord& b : bounds.bounds)
    out << "bound name=" << b.name << " value=" << b.value << " holds=" << b.holds << " tight=" << b.tight << "\n";
  if (witnesses) {
    const spg::SpResult certificate = spg::sp_certificate(g, limits);
    out << "factor k=" << certificate.factor.b << " edges=" << edges_of(certificate.factor.subgraph) << "\n";
    out << "spanning_max k=" << certificate.value << " edges=";
    bool first = true;
    for (spg::EdgeId e : certificate.spanning_max.subgraph.edges()) {
      out << (first ? "" : ",") << e << ":" << certificate.spanning_max.color(e);
      first = false;
    }
    out << (first ? "-" : "") << "\n";
  }
  return out.str();
}

spg::Multigraph tightness_from(const std::string& base, int r, int edge) {
  spg::Multigraph h;
  if (base == "complete") h = spg::complete_graph(r + 1);
  else if (base == "bipartite") h = spg::complete_bipartite_graph(r, r);
  else throw spg::InputError("tightness base must be complete or bipartite");
  const spg::Matching m = spg::maximum_matching(h);
  const std::vector<spg::EdgeId> pm(m.edges().begin(), m.edges().end());
  const spg::EdgeId f = edge < 0 ? pm.front() : edge;
  return spg::tightness_graph(h, pm, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning k-edge-colourable subgraphs: sp(G), witnesses and verification campaigns"};
  app.require_subcommand(1);

  spg::SearchLimits limits;
  std::string output;

  auto* compute = app.add_subcommand("compute", "sp, nu, chromatic index, bounds and witnesses of a graph file");
  std::string path;
  bool witnesses = false;
  int compute_max_n = static_cast<int>(limits.subset_vertices);
  int compute_max_edges = static_cast<int>(limits.exact_edges);
  compute->add_option("path", path, "graph file")->required();
  compute->add_flag("--witnesses", witnesses, "print a [1,k]-factor and a spanning maximum k-edge-colouring");
  compute->add_option("--max-n", compute_max_n, "vertex cap for subset enumeration")->capture_default_str();
  compute->add_option("--max-edges", compute_max_edges, "edge cap for exact colouring searches")->capture_default_str();
  compute->add_option("--output", output, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "run theorem checks over a graph family");
  spg::CampaignOptions campaign;
  std::string theorems;
  verify->add_option("--family", campaign.family, "exhaustive | multigraph | random | trees | generated")->capture_default_str();
  verify->add_option("--max-n", campaign.max_n, "largest vertex count")->capture_default_str();
  verify->add_option("--max-edges", campaign.max_edges, "largest edge count (edges per random graph)")->capture_default_str();
  verify->add_option("--seed", campaign.seed, "first seed of random families")->capture_default_str();
  verify->add_option("--count", campaign.count, "number of random instances")->capture_default_str();
  verify->add_option("--theorems", theorems, "comma separated subset of checks (default: all)");
  verify->add_option("--jobs", campaign.jobs, "worker threads (0 = all cores)")->capture_default_str();
  verify->add_option("--output", output, "write the report here instead of stdout");

  auto* generate = app.add_subcommand("generate", "write a graph of a named family");
  std::string family;
  int a = 1, b = 1, n = 4, p = 3, r = 3, m = 0, mu = 1, edge = -1;
  std::uint64_t seed = 1;
  std::string base = "complete";
  generate->add_option("family", family, "prop21 | tightness | star | path | cycle | complete | random")->required();
  generate->add_option("--a", a, "prop21 coefficient");
  generate->add_option("--b", b, "prop21 exponent");
  generate->add_option("--n", n, "prop21 base, or vertex count");
  generate->add_option("--p", p, "star size");
  generate->add_option("--r", r, "tightness regularity");
  generate->add_option("--base", base, "tightness base: complete (K_{r+1}) or bipartite (K_{r,r})");
  generate->add_option("--edge", edge, "tightness: perfect matching edge to subdivide (default lowest)");
  generate->add_option("--m", m, "random: edge count");
  generate->add_option("--mu", mu, "random: multiplicity cap");
  generate->add_option("--seed", seed, "random: seed");
  generate->add_option("--output", output, "write the graph here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) {
      limits.subset_vertices = static_cast<std::size_t>(compute_max_n);
      limits.exact_edges = static_cast<std::size_t>(compute_max_edges);
      const spg::Multigraph g = spg::read_graph_file(path);
      emit(compute_report(g, witnesses, limits), output);
      return 0;
    }
    if (*verify) {
      std::stringstream list(theorems);
      for (std::string t; std::getline(list, t, ',');)
        if (!t.empty()) campaign.theorems.push_back(t);
      const auto wide = static_cast<std::size_t>(std::max(campaign.max_edges, 0));
      campaign.limits.exact_edges = std::max(campaign.limits.exact_edges, wide);
      campaign.limits.enumerate_edges = std::max(campaign.limits.enumerate_edges, wide);
      const spg::VerificationReport report = spg::run_campaign(campaign);
      emit(spg::format_report(report), output);
      if (report.count(spg::Status::Fail) > 0) return kExitViolation;
      if (report.count(spg::Status::Capped) > 0) return kExitCap;
      return 0;
    }
    spg::Multigraph g;
    std::ostringstream spec;
    if (family == "prop21") {
      g = spg::prop21_tree(a, b, n);
      spec << "prop21 a=" << a << " b=" << b << " n=" << n;
    } else if (family == "tightness") {
      g = tightness_from(base, r, edge);
      spec << "tightness base=" << base << " r=" << r;
    } else if (family == "star") {
      g = spg::star_graph(p);
      spec << "star p=" << p;
    } else if (family == "path") {
      g = spg::path_graph(n);
      spec << "path n=" << n;
    } else if (family == "cycle") {
      g = spg::cycle_graph(n);
      spec << "cycle n=" << n;
    } else if (family == "complete") {
      g = spg::complete_graph(n);
      spec << "complete n=" << n;
    } else if (family == "random") {
      g = spg::random_multigraph(n, m, mu, seed);
      spec << "random n=" << n << " m=" << m << " mu=" << mu << " seed=" << seed;
    } else {
      throw spg::InputError("unknown family " + family);
    }
    emit(spg::serialize_graph(g, {"generator: " + spec.str()}), output);
    return 0;
  } catch (const spg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spg::ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
