#pragma once

#include <optional>
#include <vector>

#include "spg/graph.hpp"
#include "spg/limits.hpp"

namespace spg {

// A = vertices of maximum degree, B = the rest.
struct DegreeClassification {
  VertexSet a;
  VertexSet b;
};

DegreeClassification classify_ab(const Multigraph& t);

// Star forest built from the deepest BFS layer inward: edges between the two
// deepest layers are taken, their endpoints removed, and the layers recomputed
// until nothing or only v is left. Covers V(T) or V(T) - {v}.
Subgraph layered_star_decomposition(const Multigraph& t, Vertex v);
Subgraph layered_star_decomposition(const Multigraph&& t, Vertex v) = delete;

// The decomposition plus the lowest-index edge at v, when the decomposition misses v.
Subgraph extend_to_spanning_delta(const Multigraph& t, Vertex v, const Subgraph& h);

// One peel: a vertex z of degree p >= 2 with exactly p - 1 leaf neighbours is
// removed together with those leaves.
struct PeelStep {
  Multigraph remainder;
  std::vector<Vertex> original;  // remainder index -> index in the peeled tree
  Vertex center = -1;            // z, in the peeled tree
  VertexSet leaves;              // leaves removed with z, in the peeled tree
  int p = 0;
  Vertex attachment = -1;  // neighbour w of z, in the remainder
};

// Nothing when t is a star (or a single edge).
std::optional<PeelStep> peel_step(const Multigraph& t);

struct PeelCertificate {
  std::vector<PeelStep> steps;  // steps[0] peels the input tree
  Multigraph base;              // star left after the last step
};

// Rebuilds a tree from the base star by grafting the steps back in reverse.
Multigraph replay(const PeelCertificate& certificate);

struct SpDeltaTreeResult {
  bool sp_equals_delta = false;
  std::optional<PeelCertificate> certificate;  // present iff sp_equals_delta
};

// sp(T) = Delta(T) iff T is a star or peels to a star through steps whose
// remainder T1 has p = Delta(T1), sp(T1) = Delta(T1) and attachment in B(T1).
SpDeltaTreeResult is_sp_delta_tree(const Multigraph& t);

// Connected G: odd cycle -> true; tree -> recogniser; otherwise false.
bool sp_delta_connected(const Multigraph& g);

// Any G without isolated vertices: some component C has sp(C) = Delta(C) = Delta(G).
bool sp_delta(const Multigraph& g);

enum class OperPropCase { A, B, C, D };

// Builds T = T1 o K_{1,p} at v and checks the conclusion belonging to `c`:
// sp(T) = Delta(T) for D, sp(T) != Delta(T) otherwise. sp values come from the
// exact sp computation, not from the recogniser.
bool verify_operprop_case(const Multigraph& t1, int p, Vertex v, OperPropCase c, const SearchLimits& limits = {});

// Which case's hypothesis (T1, p) satisfies; every admissible pair falls in exactly one.
OperPropCase operprop_case_of(const Multigraph& t1, int p, const SearchLimits& limits = {});

}  // namespace spg
