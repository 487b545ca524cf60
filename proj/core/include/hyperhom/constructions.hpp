#pragma once

#include <span>
#include <vector>

#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

// Classes sorted ascending, ordered by smallest member.
using Partition = std::vector<std::vector<Vertex>>;

// Vertex i keeps color 1; edge j becomes vertex n+j+1 with color 2 adjacent to
// its members.
ColoredGraph incidence_graph(const Hypergraph& g);

bool is_connected(const Hypergraph& g);

// True iff the incidence graph is a forest.
bool is_berge_acyclic(const Hypergraph& g);

// One vertex per class, numbered by smallest original member; edge j becomes
// the set of classes it meets. Throws InvalidStructure unless `classes` is a
// partition of 1..n.
Hypergraph quotient(const Hypergraph& g, const Partition& classes);

Partition identity_partition(int n);

// Canonical form of an arbitrary labelling: classes sorted and ordered by min.
Partition normalize_partition(Partition classes);

// Finest partition in which u and v share a class whenever some edge of f
// contains both and hv maps them to the same target vertex. hv[v-1] is the
// image of v.
Partition merge_relation(const Hypergraph& f, std::span<const Vertex> hv);

// Edge j gets targets[j] fresh private vertices, numbered after n in edge
// order.
Hypergraph fill_edges(const Hypergraph& f, std::span<const int> targets);

// B_k: k vertices joined by one edge.
Hypergraph single_edge(int k);

// Drop later copies of repeated vertex sets; first occurrences keep order.
Hypergraph merge_parallel_edges(const Hypergraph& g);

// Multiplicity-counted i-degrees of v for i = 1..n.
DegreeSequence degree_sequence(const Hypergraph& g, Vertex v);

// Adds r edges, each containing u and s fresh vertices private to that edge.
Hypergraph build_b_rs(const Hypergraph& base, Vertex u, int r, int s);

// perm[v-1] is the new name of v; the edge order is kept.
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

// Disjoint union, vertices of b shifted by |V(a)|.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperhom
