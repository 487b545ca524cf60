#include "hyperhom/refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperhom {

namespace {

// Shorter parts first, then by text, so {{1,1}} precedes {{1,1,1}}.
void sort_parts(std::vector<std::string>& parts) {
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

void append_list(std::string& key, const std::vector<ColorId>& ids) {
  key += '(';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(ids[i]);
  }
  key += ')';
}

// Colors of round i+1 as a function of round i: the induced partition is
// stable when the map is a bijection on the colors that occur.
bool same_partition(const std::vector<ColorId>& a, const std::vector<ColorId>& b,
                    std::map<ColorId, ColorId>& forward, std::map<ColorId, ColorId>& backward) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    auto [f, fresh_f] = forward.emplace(a[v], b[v]);
    if (!fresh_f && f->second != b[v]) return false;
    auto [r, fresh_r] = backward.emplace(b[v], a[v]);
    if (!fresh_r && r->second != a[v]) return false;
  }
  return true;
}

std::optional<int> first_stable_round(const std::vector<std::vector<ColorId>>& rounds) {
  for (std::size_t i = 0; i + 1 < rounds.size(); ++i) {
    std::map<ColorId, ColorId> fwd, bwd;
    if (same_partition(rounds[i], rounds[i + 1], fwd, bwd)) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

ColorId ColorPalette::intern(std::string key, Entry entry) {
  auto [it, fresh] = index_.emplace(std::move(key), static_cast<ColorId>(entries_.size()));
  if (fresh) entries_.push_back(std::move(entry));
  return it->second;
}

ColorId ColorPalette::atom(int label) {
  return intern("a" + std::to_string(label), Entry{Kind::kAtom, label, std::nullopt, {}});
}

ColorId ColorPalette::edge_multiset(std::vector<std::vector<ColorId>> groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  std::string key = "e";
  for (const auto& g : groups) append_list(key, g);
  return intern(std::move(key), Entry{Kind::kEdges, 0, std::nullopt, std::move(groups)});
}

ColorId ColorPalette::neighbor_multiset(std::optional<ColorId> own, std::vector<ColorId> neighbors) {
  std::sort(neighbors.begin(), neighbors.end());
  std::string key = "n";
  if (own) key += "o" + std::to_string(*own) + ":";
  append_list(key, neighbors);
  return intern(std::move(key), Entry{Kind::kNeighbors, 0, own, {std::move(neighbors)}});
}

std::string ColorPalette::render(ColorId id) const {
  const Entry& e = entries_.at(static_cast<std::size_t>(id));
  auto multiset = [this](const std::vector<ColorId>& ids) {
    std::vector<std::string> parts;
    for (ColorId c : ids) parts.push_back(render(c));
    // Sorting the rendered text keeps the output independent of id order.
    sort_parts(parts);
    std::string out = "{{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += parts[i];
    }
    return out + "}}";
  };
  switch (e.kind) {
    case Kind::kAtom:
      return std::to_string(e.label);
    case Kind::kEdges: {
      std::vector<std::string> parts;
      for (const auto& g : e.groups) parts.push_back(multiset(g));
      sort_parts(parts);
      std::string out = "{{";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
      }
      return out + "}}";
    }
    case Kind::kNeighbors: {
      std::string inner = multiset(e.groups.front());
      if (e.own) return "(" + render(*e.own) + ";" + inner + ")";
      return inner;
    }
  }
  return {};
}

ColorHistory::ColorHistory(std::shared_ptr<ColorPalette> palette, std::vector<std::vector<ColorId>> rounds)
    : palette_(std::move(palette)), rounds_(std::move(rounds)), stable_round_(first_stable_round(rounds_)) {}

Histogram ColorHistory::histogram(int i) const {
  std::map<ColorId, int> counts;
  for (ColorId c : round(i)) ++counts[c];
  return {counts.begin(), counts.end()};
}

Partition ColorHistory::partition(int i) const {
  std::vector<Vertex> all(round(i).size());
  std::iota(all.begin(), all.end(), 1);
  return partition(i, all);
}

Partition ColorHistory::partition(int i, const std::vector<Vertex>& vertices) const {
  std::map<ColorId, std::vector<Vertex>> classes;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    classes[color(i, vertices[k])].push_back(static_cast<Vertex>(k + 1));
  }
  Partition out;
  for (auto& [c, members] : classes) out.push_back(std::move(members));
  return normalize_partition(std::move(out));
}

int ColorHistory::num_classes(int i) const { return static_cast<int>(histogram(i).size()); }

ColorHistory cr_graph(const ColoredGraph& g, int max_rounds, bool include_own_color,
                      std::shared_ptr<ColorPalette> palette) {
  if (!palette) palette = std::make_shared<ColorPalette>();
  const int n = g.num_vertices();
  std::vector<std::vector<ColorId>> rounds;
  std::vector<ColorId> current(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) current[static_cast<std::size_t>(v - 1)] = palette->atom(g.color(v));
  rounds.push_back(current);
  for (int r = 0; r < max_rounds; ++r) {
    std::vector<ColorId> next(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<ColorId> nb;
      for (Vertex u : g.neighbors(v)) nb.push_back(current[static_cast<std::size_t>(u - 1)]);
      std::optional<ColorId> own;
      if (include_own_color) own = current[static_cast<std::size_t>(v - 1)];
      next[static_cast<std::size_t>(v - 1)] = palette->neighbor_multiset(own, std::move(nb));
    }
    current = std::move(next);
    rounds.push_back(current);
  }
  return ColorHistory(std::move(palette), std::move(rounds));
}

ColorHistory cr_hypergraph(const Hypergraph& g, int max_rounds, std::shared_ptr<ColorPalette> palette) {
  if (!palette) palette = std::make_shared<ColorPalette>();
  const int n = g.num_vertices();
  std::vector<std::vector<ColorId>> rounds;
  std::vector<ColorId> current(static_cast<std::size_t>(n), palette->atom(1));
  rounds.push_back(current);
  for (int r = 0; r < max_rounds; ++r) {
    std::vector<std::vector<ColorId>> edge_colors;
    for (const Edge& e : g.edges()) {
      std::vector<ColorId> members;
      for (Vertex u : e) members.push_back(current[static_cast<std::size_t>(u - 1)]);
      edge_colors.push_back(std::move(members));
    }
    std::vector<ColorId> next(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<std::vector<ColorId>> groups;
      for (int j : g.incident_edges(v)) groups.push_back(edge_colors[static_cast<std::size_t>(j)]);
      next[static_cast<std::size_t>(v - 1)] = palette->edge_multiset(std::move(groups));
    }
    current = std::move(next);
    rounds.push_back(current);
  }
  return ColorHistory(std::move(palette), std::move(rounds));
}

Verdict compare_histories(const ColorHistory& g, const ColorHistory& h) {
  const int rounds = std::min(g.num_rounds(), h.num_rounds());
  for (int i = 0; i < rounds; ++i) {
    if (g.histogram(i) != h.histogram(i)) return Verdict{true, i};
    if (i + 1 < rounds) {
      std::map<ColorId, ColorId> fwd, bwd;
      if (same_partition(g.round(i), g.round(i + 1), fwd, bwd) &&
          same_partition(h.round(i), h.round(i + 1), fwd, bwd)) {
        return Verdict{false, std::nullopt};
      }
    }
  }
  return Verdict{false, std::nullopt};
}

Verdict distinguishes_hypergraphs(const Hypergraph& g, const Hypergraph& h, std::optional<int> max_rounds) {
  const int cap = max_rounds.value_or(g.num_vertices() + h.num_vertices() + 1);
  auto palette = std::make_shared<ColorPalette>();
  return compare_histories(cr_hypergraph(g, cap, palette), cr_hypergraph(h, cap, palette));
}

Verdict distinguishes_cgraphs(const ColoredGraph& g, const ColoredGraph& h, bool include_own_color,
                              std::optional<int> max_rounds) {
  const int cap = max_rounds.value_or(g.num_vertices() + h.num_vertices() + 1);
  auto palette = std::make_shared<ColorPalette>();
  return compare_histories(cr_graph(g, cap, include_own_color, palette),
                           cr_graph(h, cap, include_own_color, palette));
}

}  // namespace hyperhom
