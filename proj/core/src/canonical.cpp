#include "hyperhom/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace hyperhom {

namespace {

constexpr int kMaxEncodable = 255;

void check_encodable(int n, int m) {
  if (n > kMaxEncodable || m > kMaxEncodable) {
    throw InvalidStructure("canonical encoding supports at most 255 vertices and edges");
  }
}

std::vector<Edge> relabelled_edges(const Hypergraph& g, const std::vector<int>& label) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    Edge out;
    for (Vertex v : e) out.push_back(label[static_cast<std::size_t>(v - 1)]);
    std::sort(out.begin(), out.end());
    edges.push_back(std::move(out));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string serialize(int n, const std::vector<Edge>& edges) {
  std::string out;
  out += static_cast<char>(n);
  out += static_cast<char>(edges.size());
  for (const Edge& e : edges) {
    out += static_cast<char>(e.size());
    for (Vertex v : e) out += static_cast<char>(v);
  }
  return out;
}

// Ranks are 0-based and contiguous. Each pass orders vertices by their old
// rank followed by the sorted member-rank multisets of their incident edges;
// ordering by old rank first keeps each pass a refinement.
void refine(const Hypergraph& g, std::vector<int>& rank) {
  const int n = g.num_vertices();
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> edge_ranks;
    for (const Edge& e : g.edges()) {
      std::vector<int> r;
      for (Vertex v : e) r.push_back(rank[static_cast<std::size_t>(v - 1)]);
      std::sort(r.begin(), r.end());
      edge_ranks.push_back(std::move(r));
    }
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<const std::vector<int>*> inc;
      for (int j : g.incident_edges(v)) inc.push_back(&edge_ranks[static_cast<std::size_t>(j)]);
      std::sort(inc.begin(), inc.end(), [](auto* a, auto* b) { return *a < *b; });
      auto& s = sig[static_cast<std::size_t>(v - 1)];
      s.push_back(rank[static_cast<std::size_t>(v - 1)]);
      for (auto* r : inc) {
        s.push_back(static_cast<int>(r->size()));
        s.insert(s.end(), r->begin(), r->end());
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      rank[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

class Search {
 public:
  explicit Search(const Hypergraph& g) : g_(g) {}

  Canonical<Hypergraph> run() {
    std::vector<int> rank(static_cast<std::size_t>(g_.num_vertices()), 0);
    descend(std::move(rank));
    return {Hypergraph(g_.num_vertices(), std::move(best_edges_)), std::move(best_)};
  }

 private:
  void descend(std::vector<int> rank) {
    refine(g_, rank);
    const int n = g_.num_vertices();
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int r : rank) ++size[static_cast<std::size_t>(r)];
    int target = -1;
    for (int r = 0; r < n; ++r) {
      if (size[static_cast<std::size_t>(r)] > 1) {
        target = r;
        break;
      }
    }
    if (target < 0) {
      std::vector<int> label(rank.size());
      for (std::size_t v = 0; v < rank.size(); ++v) label[v] = rank[v] + 1;
      auto edges = relabelled_edges(g_, label);
      std::string enc = serialize(n, edges);
      if (!found_ || enc < best_) {
        found_ = true;
        best_ = std::move(enc);
        best_edges_ = std::move(edges);
      }
      return;
    }
    // Swapping two vertices with the same incident edges is an automorphism
    // fixing everything else, so one member per twin class suffices.
    std::vector<const std::vector<int>*> tried;
    for (Vertex v = 1; v <= n; ++v) {
      if (rank[static_cast<std::size_t>(v - 1)] != target) continue;
      const auto* inc = &g_.incident_edges(v);
      if (std::any_of(tried.begin(), tried.end(), [&](auto* t) { return *t == *inc; })) continue;
      tried.push_back(inc);
      std::vector<int> next(rank.size());
      for (std::size_t w = 0; w < rank.size(); ++w) {
        next[w] = 2 * rank[w] + (rank[w] == target && static_cast<Vertex>(w + 1) != v ? 1 : 0);
      }
      descend(std::move(next));
    }
  }

  const Hypergraph& g_;
  bool found_ = false;
  std::string best_;
  std::vector<Edge> best_edges_;
};

std::string encode_cgraph(const ColoredGraph& g, const std::vector<int>& label) {
  const int n = g.num_vertices();
  std::string out;
  out += static_cast<char>(n);
  std::string colors(static_cast<std::size_t>(n), '\0');
  for (Vertex v = 1; v <= n; ++v) {
    colors[static_cast<std::size_t>(label[static_cast<std::size_t>(v - 1)] - 1)] = static_cast<char>(g.color(v));
  }
  out += colors;
  std::string bits(static_cast<std::size_t>(n * n), '0');
  for (auto [u, v] : g.edge_list()) {
    const int a = label[static_cast<std::size_t>(u - 1)] - 1;
    const int b = label[static_cast<std::size_t>(v - 1)] - 1;
    bits[static_cast<std::size_t>(a * n + b)] = '1';
    bits[static_cast<std::size_t>(b * n + a)] = '1';
  }
  return out + bits;
}

std::string encode_digraph(const Digraph& g, const std::vector<int>& label) {
  const int n = g.num_vertices();
  std::string bits(static_cast<std::size_t>(n * n), '0');
  for (auto [u, v] : g.arcs()) {
    const int a = label[static_cast<std::size_t>(u - 1)] - 1;
    const int b = label[static_cast<std::size_t>(v - 1)] - 1;
    bits[static_cast<std::size_t>(a * n + b)] = '1';
  }
  return std::string(1, static_cast<char>(n)) + bits;
}

template <class Encode>
std::pair<std::string, std::vector<int>> min_over_permutations(int n, Encode encode) {
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 1);
  std::optional<std::string> best;
  std::vector<int> best_label = label;
  do {
    std::string enc = encode(label);
    if (!best || enc < *best) {
      best = std::move(enc);
      best_label = label;
    }
  } while (std::next_permutation(label.begin(), label.end()));
  return {std::move(*best), std::move(best_label)};
}

}  // namespace

Canonical<Hypergraph> canonical_form(const Hypergraph& g) {
  check_encodable(g.num_vertices(), g.num_edges());
  if (g.num_vertices() == 0) return {g, serialize(0, {})};
  return Search(g).run();
}

std::string canonical_encoding(const Hypergraph& g) { return canonical_form(g).encoding; }

std::string canonical_encoding_brute(const Hypergraph& g) {
  check_encodable(g.num_vertices(), g.num_edges());
  return min_over_permutations(g.num_vertices(), [&](const std::vector<int>& label) {
           return serialize(g.num_vertices(), relabelled_edges(g, label));
         }).first;
}

Canonical<ColoredGraph> canonical_form(const ColoredGraph& g) {
  check_encodable(g.num_vertices(), 0);
  auto [enc, label] = min_over_permutations(
      g.num_vertices(), [&](const std::vector<int>& l) { return encode_cgraph(g, l); });
  std::vector<int> colors(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    colors[static_cast<std::size_t>(label[static_cast<std::size_t>(v - 1)] - 1)] = g.color(v);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edge_list()) {
    edges.emplace_back(label[static_cast<std::size_t>(u - 1)], label[static_cast<std::size_t>(v - 1)]);
  }
  return {ColoredGraph(g.num_vertices(), std::move(colors), edges), std::move(enc)};
}

Canonical<Digraph> canonical_form(const Digraph& g) {
  check_encodable(g.num_vertices(), 0);
  auto [enc, label] = min_over_permutations(
      g.num_vertices(), [&](const std::vector<int>& l) { return encode_digraph(g, l); });
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [u, v] : g.arcs()) {
    arcs.emplace_back(label[static_cast<std::size_t>(u - 1)], label[static_cast<std::size_t>(v - 1)]);
  }
  return {Digraph(g.num_vertices(), arcs), std::move(enc)};
}

std::string canonical_encoding(const ColoredGraph& g) { return canonical_form(g).encoding; }
std::string canonical_encoding(const Digraph& g) { return canonical_form(g).encoding; }

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace hyperhom
