#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperhom {

// Vertices are 1-based contiguous integers in every public structure.
using Vertex = int;
using Edge = std::vector<Vertex>;

// Thrown when a structure would violate its invariants.
class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hypergraph with parallel edges. Edge identity is the position in the edge
// list, so two equal vertex sets at different positions are distinct edges.
// Each stored edge is non-empty and strictly increasing.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Edges are sorted on construction; an empty edge, a repeated vertex inside
  // one edge or an out-of-range id throws InvalidStructure.
  Hypergraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int weight() const { return n_ + num_edges(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  // Edge indices (0-based) containing v, with multiplicity.
  const std::vector<int>& incident_edges(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(incident_edges(v).size()); }

  // A leaf lies in exactly one edge, counting parallel edges separately.
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  // No two edges share a vertex set.
  bool is_simple() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

// Simple undirected graph with positive vertex colors.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Throws on self-loops, duplicate edges, out-of-range ids, non-positive
  // colors or a color list whose length differs from num_vertices.
  ColoredGraph(int num_vertices, std::vector<int> colors,
               const std::vector<std::pair<Vertex, Vertex>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const;
  int color(Vertex v) const { return colors_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int>& colors() const { return colors_; }

  // Sorted neighbour list of v.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v - 1));
  }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int n_ = 0;
  std::vector<int> colors_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Simple directed graph; loops are allowed, duplicate arcs are not.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  // Sorted arc list.
  const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))] != 0;
  }
  bool has_loop() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs_;
  std::vector<char> matrix_;
};

// Entry i (0-based) counts the edges of size i+1 that contain a fixed vertex,
// parallel edges counted with multiplicity.
struct DegreeSequence {
  std::vector<int> entries;

  int total() const;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
};

}  // namespace hyperhom
