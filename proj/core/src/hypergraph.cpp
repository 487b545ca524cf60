#include "hyperhom/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hyperhom {

namespace {

void check_vertex(int n, Vertex v, const char* what) {
  if (v < 1 || v > n) {
    throw InvalidStructure(std::string(what) + ": vertex id " + std::to_string(v) +
                           " outside 1.." + std::to_string(n));
  }
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw InvalidStructure("hypergraph: negative vertex count");
  incidence_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    Edge& e = edges_[j];
    if (e.empty()) throw InvalidStructure("hypergraph: empty edge at position " + std::to_string(j));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidStructure("hypergraph: repeated vertex in edge " + std::to_string(j));
    }
    for (Vertex v : e) {
      check_vertex(n_, v, "hypergraph");
      incidence_[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(j));
    }
  }
}

const std::vector<int>& Hypergraph::incident_edges(Vertex v) const {
  check_vertex(n_, v, "incident_edges");
  return incidence_[static_cast<std::size_t>(v - 1)];
}

bool Hypergraph::is_simple() const {
  std::set<Edge> seen(edges_.begin(), edges_.end());
  return seen.size() == edges_.size();
}

ColoredGraph::ColoredGraph(int num_vertices, std::vector<int> colors,
                           const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(num_vertices), colors_(std::move(colors)) {
  if (n_ < 0) throw InvalidStructure("cgraph: negative vertex count");
  if (colors_.size() != static_cast<std::size_t>(n_)) {
    throw InvalidStructure("cgraph: expected " + std::to_string(n_) + " colors, got " +
                           std::to_string(colors_.size()));
  }
  for (int c : colors_) {
    if (c < 1) throw InvalidStructure("cgraph: colors must be positive");
  }
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (auto [u, v] : edges) {
    check_vertex(n_, u, "cgraph");
    check_vertex(n_, v, "cgraph");
    if (u == v) throw InvalidStructure("cgraph: self-loop at " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u - 1)].push_back(v);
    adjacency_[static_cast<std::size_t>(v - 1)].push_back(u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InvalidStructure("cgraph: duplicate edge");
    }
  }
}

int ColoredGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return static_cast<int>(twice / 2);
}

bool ColoredGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> ColoredGraph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Digraph::Digraph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& arcs)
    : n_(num_vertices), arcs_(arcs) {
  if (n_ < 0) throw InvalidStructure("digraph: negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : arcs_) {
    check_vertex(n_, u, "digraph");
    check_vertex(n_, v, "digraph");
    char& cell = matrix_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))];
    if (cell != 0) {
      throw InvalidStructure("digraph: duplicate arc (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
    }
    cell = 1;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

bool Digraph::has_loop() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const auto& a) { return a.first == a.second; });
}

int DegreeSequence::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

}  // namespace hyperhom
