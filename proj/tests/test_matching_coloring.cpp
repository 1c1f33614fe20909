#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spg/edge_coloring.hpp"
#include "spg/errors.hpp"
#include "spg/families.hpp"
#include "spg/matching.hpp"

using namespace spg;

namespace {

Multigraph shannon_triangle() {
  Multigraph g(3);
  for (int i = 0; i < 2; ++i) {
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
  }
  return g;
}

// u-w doubled plus the pendant w-z: e0, e1 parallel, e2 pendant.
Multigraph double_with_pendant() { return Multigraph(3, {{0, 1}, {0, 1}, {1, 2}}); }

std::uint32_t mask_of(const Subgraph& h) {
  std::uint32_t m = 0;
  for (EdgeId e : h.edges()) m |= 1u << e;
  return m;
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("maximum matching examples") {
  CHECK(matching_number(cycle_graph(5)) == 2);
  CHECK(matching_number(complete_graph(4)) == 2);
  CHECK(matching_number(star_graph(3)) == 1);
  const Multigraph k4 = complete_graph(4);
  CHECK(is_matching(maximum_matching(k4)));
}

TEST_CASE("perfect matching with Tutte witnesses") {
  const Multigraph p4 = path_graph(4), c5g = cycle_graph(5), star3 = star_graph(3);
  CHECK(has_perfect_matching(p4).perfect);

  const auto c5 = has_perfect_matching(c5g);
  CHECK_FALSE(c5.perfect);
  REQUIRE(c5.tutte_violator);
  const auto& s = *c5.tutte_violator;
  std::uint64_t mask = 0;
  for (Vertex v : s) mask |= std::uint64_t{1} << v;
  CHECK(odd_components_without(c5g, mask) > static_cast<int>(s.size()));

  const auto star = has_perfect_matching(star3);
  CHECK_FALSE(star.perfect);
  REQUIRE(star.tutte_violator);
  CHECK(*star.tutte_violator == VertexSet{0});
}

TEST_CASE("Tutte-Berge deficiency examples") {
  CHECK(tutte_berge_deficiency(cycle_graph(5)).deficiency == 1);
  CHECK(tutte_berge_deficiency(complete_graph(4)).deficiency == 0);
  const auto star = tutte_berge_deficiency(star_graph(3));
  CHECK(star.deficiency == 2);
  CHECK(star.attaining_set == VertexSet{0});
  SearchLimits tight;
  tight.subset_vertices = 4;
  CHECK_THROWS_AS(tutte_berge_deficiency(cycle_graph(5), tight), ResourceError);
}

TEST_CASE("matching agrees with subset oracles on random multigraphs") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const int m = std::min(static_cast<int>(seed % 13), n * (n - 1));
    const Multigraph g = random_multigraph(n, m, 2, seed);
    CAPTURE(compact_string(g));
    const Matching mm = maximum_matching(g);
    CHECK(is_matching(mm));
    CHECK(mm.size() == oracle::matching_number(g));
    const int def = oracle::tutte_berge_deficiency(g);
    CHECK(tutte_berge_deficiency(g).deficiency == def);
    CHECK(n - 2 * mm.size() == def);
    // The Gallai-Edmonds set attains the maximum.
    std::uint64_t a = 0;
    for (Vertex v : gallai_edmonds_barrier(g)) a |= std::uint64_t{1} << v;
    CHECK(odd_components_without(g, a) - std::popcount(a) == def);
  }
}

}

TEST_SUITE("edge_coloring") {

TEST_CASE("chromatic index examples") {
  const Multigraph c5 = cycle_graph(5), k4 = complete_graph(4);
  CHECK(chromatic_index(c5).value == 3);
  CHECK(chromatic_index(k4).value == 3);
  const Multigraph triangle = shannon_triangle();
  const auto sh = chromatic_index(triangle);
  CHECK(sh.value == 6);
  CHECK(is_proper(sh.witness));
  CHECK(oracle::chromatic_index(shannon_triangle()) == 6);
}

TEST_CASE("k-edge-colouring of a subgraph") {
  const Multigraph p4 = path_graph(4);
  const Subgraph all(p4, {0, 1, 2});
  CHECK_FALSE(find_k_edge_coloring(all, 1));
  const auto two = find_k_edge_coloring(all, 2);
  REQUIRE(two);
  CHECK(is_proper(*two));
  CHECK(two->color(0) == two->color(2));
  CHECK(two->color(0) != two->color(1));

  const Multigraph c6 = cycle_graph(6);
  const auto alt = find_k_edge_coloring(Subgraph(c6, {0, 1, 2, 3, 4, 5}), 2);
  REQUIRE(alt);
  CHECK(is_proper(*alt));
  CHECK_THROWS_AS(find_k_edge_coloring(all, 0), InputError);
}

TEST_CASE("is_proper rejects clashes and stray colours") {
  const Multigraph p3 = path_graph(3);
  EdgeColoring c{Subgraph(p3, {0, 1}), {1, 1}, 2};
  CHECK_FALSE(is_proper(c));
  c.color_of = {1, 2};
  CHECK(is_proper(c));
  c.color_of = {1, 3};
  CHECK_FALSE(is_proper(c));
  EdgeColoring stray{Subgraph(p3, {0}), {1, 2}, 2};
  CHECK_FALSE(is_proper(stray));
}

TEST_CASE("maximum k-edge-colourable subgraphs") {
  CHECK(max_k_ecs_size(complete_graph(4), 1) == 2);
  CHECK(max_k_ecs_size(star_graph(3), 2) == 2);
  CHECK(max_k_ecs_size(complete_graph(3), 2) == 2);
  const Multigraph k3 = complete_graph(3);
  const EdgeColoring h = max_k_ecs(k3, 2);
  CHECK(is_proper(h));
  CHECK(h.subgraph.size() == 2);
}

TEST_CASE("enumeration examples") {
  const Multigraph k3 = complete_graph(3), c4 = cycle_graph(4), star3 = star_graph(3);
  CHECK(enumerate_max_k_ecs(k3, 1).size() == 3);
  CHECK(enumerate_max_k_ecs(c4, 1).size() == 2);

  const Multigraph g = double_with_pendant();
  const auto all = enumerate_max_k_ecs(g, 2);
  std::set<std::uint32_t> sets;
  for (const auto& c : all) {
    CHECK(is_proper(c));
    sets.insert(mask_of(c.subgraph));
  }
  CHECK(sets == std::set<std::uint32_t>{0b011, 0b101, 0b110});
  const auto spanning = find_spanning_max_k_ecs(g, 2);
  REQUIRE(spanning);
  CHECK(spanning->subgraph.is_spanning());
  CHECK_FALSE(find_spanning_max_k_ecs(star3, 2));
}

TEST_CASE("colouring routines agree with naive oracles") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const int m = std::min(2 + static_cast<int>(seed % 9), 3 * n * (n - 1) / 2);
    const Multigraph g = random_multigraph(n, m, 3, seed);
    CAPTURE(compact_string(g));
    const auto chi = chromatic_index(g);
    CHECK(is_proper(chi.witness));
    CHECK(chi.witness.subgraph.size() == g.edge_count());
    CHECK(chi.value == oracle::chromatic_index(g));
    for (int k = 1; k <= g.max_degree(); ++k) {
      const oracle::MaxSets ref = oracle::max_k_sets(g, k);
      CHECK(max_k_ecs_size(g, k) == ref.size);
      std::vector<std::uint32_t> got;
      for (const auto& c : enumerate_max_k_ecs(g, k)) {
        CHECK(is_proper(c));
        got.push_back(mask_of(c.subgraph));
      }
      std::sort(got.begin(), got.end());
      CHECK(got == ref.sets);
    }
  }
}

TEST_CASE("caps raise ResourceError instead of approximating") {
  const Multigraph k4 = complete_graph(4), k3 = complete_graph(3);
  SearchLimits tight;
  tight.exact_edges = 5;
  CHECK_THROWS_AS(chromatic_index(k4, tight), ResourceError);
  tight.enumerate_edges = 2;
  tight.exact_edges = 24;
  CHECK_THROWS_AS(enumerate_max_k_ecs(k3, 1, tight), ResourceError);
}

TEST_CASE("forest colouring uses Delta colours") {
  const Multigraph star = star_graph(3);
  const EdgeColoring c = color_forest(Subgraph(star, {0, 1, 2}));
  CHECK(is_proper(c));
  CHECK(c.k == 3);
  const Multigraph c4 = cycle_graph(4);
  CHECK_THROWS_AS(color_forest(Subgraph(c4, {0, 1, 2, 3})), InputError);
}

}
