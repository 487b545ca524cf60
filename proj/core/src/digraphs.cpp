#include "hyperhom/digraphs.hpp"

#include <algorithm>
#include <functional>

#include "hyperhom/canonical.hpp"
#include "hyperhom/enumerate.hpp"

namespace hyperhom {

Digraph tensor_product(const Digraph& g, const Digraph& h) {
  const int nh = h.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [u, v] : g.arcs()) {
    for (auto [x, y] : h.arcs()) arcs.emplace_back((u - 1) * nh + x, (v - 1) * nh + y);
  }
  return Digraph(g.num_vertices() * nh, arcs);
}

Digraph transitive_tournament(int n) {
  if (n < 0) throw InvalidStructure("transitive_tournament: negative size");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) arcs.emplace_back(i, j);
  }
  return Digraph(n, arcs);
}

Count count_dihom(const Digraph& f, const Digraph& g) {
  const int nf = f.num_vertices();
  const int ng = g.num_vertices();
  // Arcs of F checked once both endpoints are placed.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> closing(static_cast<std::size_t>(nf) + 1);
  for (auto [u, v] : f.arcs()) closing[static_cast<std::size_t>(std::max(u, v))].emplace_back(u, v);
  std::vector<Vertex> map(static_cast<std::size_t>(nf) + 1, 0);
  Count total = 0;
  std::function<void(Vertex)> place = [&](Vertex v) {
    if (v > nf) {
      ++total;
      return;
    }
    for (Vertex a = 1; a <= ng; ++a) {
      map[static_cast<std::size_t>(v)] = a;
      bool ok = true;
      for (auto [x, y] : closing[static_cast<std::size_t>(v)]) {
        if (!g.has_arc(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)])) {
          ok = false;
          break;
        }
      }
      if (ok) place(v + 1);
    }
  };
  place(1);
  return total;
}

bool in_A_n(const Digraph& g, int n) { return count_dihom(g, transitive_tournament(n)) > 0; }

std::optional<int> longest_path_vertices(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : g.arcs()) ++indegree[static_cast<std::size_t>(v)];
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::vector<int> depth(static_cast<std::size_t>(n) + 1, 1);
  int processed = 0;
  int longest = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++processed;
    longest = std::max(longest, depth[static_cast<std::size_t>(v)]);
    for (Vertex w = 1; w <= n; ++w) {
      if (!g.has_arc(v, w)) continue;
      depth[static_cast<std::size_t>(w)] =
          std::max(depth[static_cast<std::size_t>(w)], depth[static_cast<std::size_t>(v)] + 1);
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  if (processed != n) return std::nullopt;
  return longest;
}

bool in_A_n_by_paths(const Digraph& g, int n) {
  const auto longest = longest_path_vertices(g);
  return longest && *longest <= n;
}

bool check_multiplicativity(const Digraph& f, const Digraph& g, const Digraph& h) {
  return count_dihom(f, tensor_product(g, h)) == count_dihom(f, g) * count_dihom(f, h);
}

DagReport distinguish_by_A3(const Digraph& g, const Digraph& h, int max_pattern_v) {
  DagReport report;
  report.isomorphic = is_isomorphic(g, h);
  for (const Digraph& f : enum_dags_A3(max_pattern_v)) {
    ++report.patterns_checked;
    Count a = count_dihom(f, g);
    Count b = count_dihom(f, h);
    if (a != b) {
      report.witness = f;
      report.count_g = a;
      report.count_h = b;
      break;
    }
  }
  if (report.isomorphic) {
    report.consistent = !report.witness;
  } else {
    report.budget_exhausted = !report.witness;
  }
  return report;
}

}  // namespace hyperhom
