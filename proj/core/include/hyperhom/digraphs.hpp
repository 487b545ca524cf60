#pragma once

#include <optional>

#include "hyperhom/homcount.hpp"
#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

// Vertex (u, x) is numbered (u-1)*|V(H)| + x.
Digraph tensor_product(const Digraph& g, const Digraph& h);

// Arcs (i, j) for all i < j.
Digraph transitive_tournament(int n);

// Arc-preserving vertex maps F -> G.
Count count_dihom(const Digraph& f, const Digraph& g);

// Hom(G, T_n) > 0.
bool in_A_n(const Digraph& g, int n);

// G is acyclic (no loops) and every directed path has at most n vertices.
// Agrees with in_A_n; kept separate so the two can be compared.
bool in_A_n_by_paths(const Digraph& g, int n);

// Number of vertices on a longest directed path, or nullopt if G has a
// directed cycle or a loop.
std::optional<int> longest_path_vertices(const Digraph& g);

// Hom(F, G x H) == Hom(F, G) * Hom(F, H).
bool check_multiplicativity(const Digraph& f, const Digraph& g, const Digraph& h);

struct DagReport {
  bool isomorphic = false;
  std::optional<Digraph> witness;
  Count count_g = 0;
  Count count_h = 0;
  int patterns_checked = 0;
  // Non-isomorphic inputs with no separating pattern within the budget.
  bool budget_exhausted = false;
  // Isomorphic inputs never get a witness; others are consistent either way,
  // exhaustion is reported separately.
  bool consistent = true;
};

// Searches the A_3 patterns on at most max_pattern_v vertices, smallest first,
// for one with Hom(F, G) != Hom(F, H).
DagReport distinguish_by_A3(const Digraph& g, const Digraph& h, int max_pattern_v);

}  // namespace hyperhom
