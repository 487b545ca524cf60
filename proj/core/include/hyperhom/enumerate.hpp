#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperhom/canonical.hpp"
#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

// Pairwise non-isomorphic canonical representatives ordered by
// (|V| + |E|, encoding); arcs count as edges for digraphs.
template <class T>
struct FamilyOf {
  std::vector<T> members;
  std::vector<std::string> encodings;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  const T& operator[](std::size_t i) const { return members[i]; }
  auto begin() const { return members.begin(); }
  auto end() const { return members.end(); }
};

using Family = FamilyOf<Hypergraph>;
using DigraphFamily = FamilyOf<Digraph>;
using ColoredGraphFamily = FamilyOf<ColoredGraph>;

// Connected Berge-acyclic hypergraphs with |V| + |E| <= max_weight. Levels are
// cached process-wide; safe to call from several threads.
Family enum_ba(int max_weight);

// The members of enum_ba of weight exactly `weight`. The reference stays
// valid for the life of the process.
const Family& ba_level(int weight);

// Connected Berge-acyclic hypergraphs with exactly m edges, each of size at
// most n.
Family enum_ba_m_n(int m, int n);

// Hypergraphs with 1..max_v vertices, at most max_e edges of size at most
// max_edge_size.
Family enum_hypergraphs(int max_v, int max_e, int max_edge_size, bool simple_only, bool connected_only);

// Connected hypergraphs with exactly num_edges edges of size at most
// max_edge_size and at most max_v vertices. num_edges = 0 gives {K1}.
Family enum_connected(int num_edges, int max_edge_size, int max_v);

// Digraphs (loops allowed) on 1..n vertices.
DigraphFamily enum_digraphs(int n);

// Members of enum_digraphs(max_v) admitting a homomorphism into T_3.
DigraphFamily enum_dags_A3(int max_v);

// Trees on 1..max_v vertices colored from 1..num_colors.
ColoredGraphFamily enum_colored_trees(int max_v, int num_colors);

// Graphs on 1..max_v vertices colored from 1..num_colors.
ColoredGraphFamily enum_colored_graphs(int max_v, int num_colors);

}  // namespace hyperhom
