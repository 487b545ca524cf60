#include "hyperhom/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hyperhom {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  // False if a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

Partition classes_from_sets(DisjointSets& sets, int n) {
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  Partition out;
  for (int v = 0; v < n; ++v) {
    int root = sets.find(v);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(s)].push_back(v + 1);
  }
  return out;
}

}  // namespace

ColoredGraph incidence_graph(const Hypergraph& g) {
  const int n = g.num_vertices();
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  colors.resize(static_cast<std::size_t>(n + g.num_edges()), 2);
  std::vector<std::pair<Vertex, Vertex>> adj;
  for (int j = 0; j < g.num_edges(); ++j) {
    for (Vertex v : g.edge(j)) adj.emplace_back(v, n + j + 1);
  }
  return ColoredGraph(n + g.num_edges(), std::move(colors), adj);
}

bool is_connected(const Hypergraph& g) {
  const int n = g.num_vertices();
  const int nodes = n + g.num_edges();
  if (nodes <= 1) return true;
  DisjointSets sets(nodes);
  int components = nodes;
  for (int j = 0; j < g.num_edges(); ++j) {
    for (Vertex v : g.edge(j)) {
      if (sets.unite(v - 1, n + j)) --components;
    }
  }
  return components == 1;
}

bool is_berge_acyclic(const Hypergraph& g) {
  const int n = g.num_vertices();
  DisjointSets sets(n + g.num_edges());
  for (int j = 0; j < g.num_edges(); ++j) {
    for (Vertex v : g.edge(j)) {
      if (!sets.unite(v - 1, n + j)) return false;
    }
  }
  return true;
}

Partition identity_partition(int n) {
  Partition p;
  for (Vertex v = 1; v <= n; ++v) p.push_back({v});
  return p;
}

Partition normalize_partition(Partition classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

Hypergraph quotient(const Hypergraph& g, const Partition& classes) {
  const int n = g.num_vertices();
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  Partition sorted = normalize_partition(classes);
  for (std::size_t c = 0; c < sorted.size(); ++c) {
    if (sorted[c].empty()) throw InvalidStructure("quotient: empty class");
    for (Vertex v : sorted[c]) {
      if (v < 1 || v > n) throw InvalidStructure("quotient: vertex " + std::to_string(v) + " out of range");
      auto& slot = class_of[static_cast<std::size_t>(v - 1)];
      if (slot >= 0) throw InvalidStructure("quotient: vertex " + std::to_string(v) + " in two classes");
      slot = static_cast<int>(c);
    }
  }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) {
    throw InvalidStructure("quotient: classes do not cover every vertex");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    std::set<Vertex> image;
    for (Vertex v : e) image.insert(class_of[static_cast<std::size_t>(v - 1)] + 1);
    edges.emplace_back(image.begin(), image.end());
  }
  return Hypergraph(static_cast<int>(sorted.size()), std::move(edges));
}

Partition merge_relation(const Hypergraph& f, std::span<const Vertex> hv) {
  const int n = f.num_vertices();
  if (hv.size() != static_cast<std::size_t>(n)) {
    throw InvalidStructure("merge_relation: vertex map is not total");
  }
  DisjointSets sets(n);
  for (const Edge& e : f.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        if (hv[static_cast<std::size_t>(e[a] - 1)] == hv[static_cast<std::size_t>(e[b] - 1)]) {
          sets.unite(e[a] - 1, e[b] - 1);
        }
      }
    }
  }
  return classes_from_sets(sets, n);
}

Hypergraph fill_edges(const Hypergraph& f, std::span<const int> targets) {
  if (targets.size() != static_cast<std::size_t>(f.num_edges())) {
    throw InvalidStructure("fill_edges: need one target per edge");
  }
  int next = f.num_vertices();
  std::vector<Edge> edges = f.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (targets[j] < 0) throw InvalidStructure("fill_edges: negative leaf count");
    for (int i = 0; i < targets[j]; ++i) edges[j].push_back(++next);
  }
  return Hypergraph(next, std::move(edges));
}

Hypergraph single_edge(int k) {
  if (k < 1) throw InvalidStructure("single_edge: k must be positive");
  Edge e(static_cast<std::size_t>(k));
  std::iota(e.begin(), e.end(), 1);
  return Hypergraph(k, {e});
}

Hypergraph merge_parallel_edges(const Hypergraph& g) {
  std::set<Edge> seen;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (seen.insert(e).second) kept.push_back(e);
  }
  return Hypergraph(g.num_vertices(), std::move(kept));
}

DegreeSequence degree_sequence(const Hypergraph& g, Vertex v) {
  DegreeSequence d;
  d.entries.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int j : g.incident_edges(v)) ++d.entries[g.edge(j).size() - 1];
  return d;
}

Hypergraph build_b_rs(const Hypergraph& base, Vertex u, int r, int s) {
  if (s < 1) throw InvalidStructure("build_b_rs: s must be positive");
  if (r < 0) throw InvalidStructure("build_b_rs: r must be non-negative");
  if (u < 1 || u > base.num_vertices()) throw InvalidStructure("build_b_rs: u out of range");
  int next = base.num_vertices();
  std::vector<Edge> edges = base.edges();
  for (int i = 0; i < r; ++i) {
    Edge e{u};
    for (int j = 0; j < s; ++j) e.push_back(++next);
    edges.push_back(std::move(e));
  }
  return Hypergraph(next, std::move(edges));
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InvalidStructure("relabel: permutation has wrong length");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(perm[static_cast<std::size_t>(v - 1)]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    Edge shifted;
    for (Vertex v : e) shifted.push_back(v + a.num_vertices());
    edges.push_back(std::move(shifted));
  }
  return Hypergraph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace hyperhom
