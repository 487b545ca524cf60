#include "hyperhom/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <utility>

#include "hyperhom/constructions.hpp"
#include "hyperhom/digraphs.hpp"
#include "hyperhom/homcount.hpp"

namespace hyperhom {

namespace {

int weight_of(const Hypergraph& g) { return g.weight(); }
int weight_of(const Digraph& g) { return g.num_vertices() + g.num_arcs(); }
int weight_of(const ColoredGraph& g) { return g.num_vertices() + g.num_edges(); }

// Deduplicates by encoding while collecting, then sorts into family order.
template <class T>
class Collector {
 public:
  bool add(const T& g) {
    auto c = canonical_form(g);
    const int w = weight_of(c.form);
    return seen_.try_emplace({w, std::move(c.encoding)}, std::move(c.form)).second;
  }

  FamilyOf<T> finish() && {
    FamilyOf<T> out;
    for (auto& [key, g] : seen_) {
      out.encodings.push_back(key.second);
      out.members.push_back(std::move(g));
    }
    return out;
  }

  std::vector<T> members() const {
    std::vector<T> out;
    for (const auto& [key, g] : seen_) out.push_back(g);
    return out;
  }

 private:
  std::map<std::pair<int, std::string>, T> seen_;
};

// Level w holds the connected Berge-acyclic hypergraphs of weight exactly w.
// Every incidence tree with at least two nodes has a leaf whose removal stays
// valid, so level w is the set of one-leaf extensions of level w-1.
class BaCatalog {
 public:
  const Family& level(int weight) {
    std::lock_guard lock(mutex_);
    if (levels_.empty()) {
      Collector<Hypergraph> k1;
      k1.add(Hypergraph(1, {}));
      levels_.push_back(std::move(k1).finish());
    }
    while (static_cast<int>(levels_.size()) < weight) extend();
    return levels_[static_cast<std::size_t>(weight - 1)];
  }

 private:
  void extend() {
    Collector<Hypergraph> next;
    for (const Hypergraph& g : levels_.back()) {
      const int n = g.num_vertices();
      for (Vertex v = 1; v <= n; ++v) {
        auto edges = g.edges();
        edges.push_back({v});
        next.add(Hypergraph(n, std::move(edges)));
      }
      for (int j = 0; j < g.num_edges(); ++j) {
        auto edges = g.edges();
        edges[static_cast<std::size_t>(j)].push_back(n + 1);
        next.add(Hypergraph(n + 1, std::move(edges)));
      }
    }
    levels_.push_back(std::move(next).finish());
  }

  std::mutex mutex_;
  // deque keeps references to earlier levels valid while new ones are added.
  std::deque<Family> levels_;
};

BaCatalog& ba_catalog() {
  static BaCatalog catalog;
  return catalog;
}

// Non-empty subsets of {1..n} with at most k members, as sorted edges.
std::vector<Edge> subsets(int n, int k) {
  std::vector<Edge> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Edge e;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) e.push_back(v + 1);
    }
    if (static_cast<int>(e.size()) <= k) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Family enum_ba(int max_weight) {
  Family out;
  for (int w = 1; w <= max_weight; ++w) {
    const Family& level = ba_level(w);
    out.members.insert(out.members.end(), level.members.begin(), level.members.end());
    out.encodings.insert(out.encodings.end(), level.encodings.begin(), level.encodings.end());
  }
  return out;
}

const Family& ba_level(int weight) {
  if (weight < 1) throw InvalidStructure("ba_level: weight must be positive");
  return ba_catalog().level(weight);
}

Family enum_ba_m_n(int m, int n) {
  if (m < 0 || n < 1) throw InvalidStructure("enum_ba_m_n: need m >= 0 and n >= 1");
  // m edges of size <= n keep at most 1 + m(n-1) vertices.
  Family all = enum_ba(m * n + 1);
  Family out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Hypergraph& g = all[i];
    if (g.num_edges() != m) continue;
    const bool small = std::all_of(g.edges().begin(), g.edges().end(),
                                   [n](const Edge& e) { return static_cast<int>(e.size()) <= n; });
    if (!small) continue;
    out.members.push_back(g);
    out.encodings.push_back(all.encodings[i]);
  }
  return out;
}

Family enum_hypergraphs(int max_v, int max_e, int max_edge_size, bool simple_only, bool connected_only) {
  if (max_v < 0 || max_e < 0 || max_edge_size < 0) throw InvalidStructure("enum_hypergraphs: negative bound");
  if (max_v > 8) throw InvalidStructure("enum_hypergraphs: at most 8 vertices");
  Collector<Hypergraph> out;
  for (int n = 1; n <= max_v; ++n) {
    const auto pool = subsets(n, max_edge_size);
    std::vector<std::size_t> pick;
    // Multisets (or sets, when simple) of pool indices in non-decreasing order.
    auto visit = [&](auto&& self, std::size_t from) -> void {
      std::vector<Edge> edges;
      for (std::size_t i : pick) edges.push_back(pool[i]);
      Hypergraph g(n, std::move(edges));
      if (!connected_only || is_connected(g)) out.add(g);
      if (static_cast<int>(pick.size()) == max_e) return;
      for (std::size_t i = from; i < pool.size(); ++i) {
        pick.push_back(i);
        self(self, simple_only ? i + 1 : i);
        pick.pop_back();
      }
    };
    visit(visit, 0);
  }
  return std::move(out).finish();
}

Family enum_connected(int num_edges, int max_edge_size, int max_v) {
  if (num_edges < 0 || max_edge_size < 0 || max_v < 1) throw InvalidStructure("enum_connected: bad bounds");
  if (num_edges == 0) {
    Collector<Hypergraph> only;
    only.add(Hypergraph(1, {}));
    return std::move(only).finish();
  }
  std::vector<Hypergraph> level;
  {
    Collector<Hypergraph> first;
    for (int a = 1; a <= std::min(max_edge_size, max_v); ++a) first.add(single_edge(a));
    level = first.members();
  }
  for (int step = 1; step < num_edges; ++step) {
    Collector<Hypergraph> next;
    for (const Hypergraph& g : level) {
      const int n = g.num_vertices();
      for (const Edge& old_part : subsets(n, max_edge_size)) {
        const int room = std::min(max_edge_size - static_cast<int>(old_part.size()), max_v - n);
        for (int fresh = 0; fresh <= room; ++fresh) {
          Edge e = old_part;
          for (int i = 1; i <= fresh; ++i) e.push_back(n + i);
          auto edges = g.edges();
          edges.push_back(std::move(e));
          next.add(Hypergraph(n + fresh, std::move(edges)));
        }
      }
    }
    level = next.members();
  }
  Collector<Hypergraph> out;
  for (const auto& g : level) out.add(g);
  return std::move(out).finish();
}

DigraphFamily enum_digraphs(int n) {
  if (n < 0) throw InvalidStructure("enum_digraphs: negative size");
  if (n > 4) throw InvalidStructure("enum_digraphs: at most 4 vertices");
  Collector<Digraph> out;
  for (int k = 1; k <= n; ++k) {
    const int cells = k * k;
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> arcs;
      for (int c = 0; c < cells; ++c) {
        if (mask & (1u << c)) arcs.emplace_back(c / k + 1, c % k + 1);
      }
      out.add(Digraph(k, arcs));
    }
  }
  return std::move(out).finish();
}

DigraphFamily enum_dags_A3(int max_v) {
  // Pattern searches ask for the same small family once per pair.
  static std::mutex mu;
  static std::map<int, DigraphFamily> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(max_v); it != cache.end()) return it->second;
  DigraphFamily all = enum_digraphs(max_v);
  DigraphFamily& out = cache[max_v];
  const Digraph t3 = transitive_tournament(3);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (count_dihom(all[i], t3) == 0) continue;
    out.members.push_back(all[i]);
    out.encodings.push_back(all.encodings[i]);
  }
  return out;
}

ColoredGraphFamily enum_colored_trees(int max_v, int num_colors) {
  if (max_v < 0 || num_colors < 1) throw InvalidStructure("enum_colored_trees: bad bounds");
  if (max_v > 8) throw InvalidStructure("enum_colored_trees: at most 8 vertices");
  Collector<ColoredGraph> out;
  if (max_v == 0) return std::move(out).finish();
  std::vector<ColoredGraph> level;
  {
    Collector<ColoredGraph> first;
    for (int c = 1; c <= num_colors; ++c) first.add(ColoredGraph(1, {c}, {}));
    level = first.members();
  }
  for (const auto& t : level) out.add(t);
  for (int n = 2; n <= max_v; ++n) {
    Collector<ColoredGraph> next;
    for (const ColoredGraph& t : level) {
      for (Vertex attach = 1; attach < n; ++attach) {
        for (int c = 1; c <= num_colors; ++c) {
          auto colors = t.colors();
          colors.push_back(c);
          auto edges = t.edge_list();
          edges.emplace_back(attach, n);
          next.add(ColoredGraph(n, std::move(colors), edges));
        }
      }
    }
    level = next.members();
    for (const auto& t : level) out.add(t);
  }
  return std::move(out).finish();
}

ColoredGraphFamily enum_colored_graphs(int max_v, int num_colors) {
  if (max_v < 0 || num_colors < 1) throw InvalidStructure("enum_colored_graphs: bad bounds");
  if (max_v > 5) throw InvalidStructure("enum_colored_graphs: at most 5 vertices");
  Collector<ColoredGraph> out;
  for (int n = 1; n <= max_v; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    }
    int colorings = 1;
    for (int i = 0; i < n; ++i) colorings *= num_colors;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask & (1u << s)) edges.push_back(slots[s]);
      }
      for (int code = 0; code < colorings; ++code) {
        std::vector<int> colors;
        for (int i = 0, rest = code; i < n; ++i, rest /= num_colors) colors.push_back(rest % num_colors + 1);
        out.add(ColoredGraph(n, std::move(colors), edges));
      }
    }
  }
  return std::move(out).finish();
}

}  // namespace hyperhom
