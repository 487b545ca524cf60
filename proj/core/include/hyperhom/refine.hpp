#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperhom/constructions.hpp"
#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

using ColorId = int;

// Interns nested multisets of colors. Two colors receive the same id exactly
// when their fully expanded nested multisets are equal, so ids produced by one
// palette can be compared across structures. Not thread-safe; share a palette
// only within one thread.
class ColorPalette {
 public:
  // Initial color label (the integer colors of round 0).
  ColorId atom(int label);
  // Hypergraph rule: multiset over incident edges of member-color multisets.
  ColorId edge_multiset(std::vector<std::vector<ColorId>> groups);
  // Graph rule: multiset of neighbour colors, optionally tagged by the
  // vertex's own previous color.
  ColorId neighbor_multiset(std::optional<ColorId> own, std::vector<ColorId> neighbors);

  // Expanded nested-multiset text, e.g. {{{{1,1}},{{1,1,1}}}}.
  std::string render(ColorId id) const;

  std::size_t size() const { return entries_.size(); }

 private:
  enum class Kind { kAtom, kEdges, kNeighbors };
  struct Entry {
    Kind kind;
    int label = 0;
    std::optional<ColorId> own;
    std::vector<std::vector<ColorId>> groups;
  };
  ColorId intern(std::string key, Entry entry);

  std::map<std::string, ColorId> index_;
  std::vector<Entry> entries_;
};

using Histogram = std::vector<std::pair<ColorId, int>>;

// rounds[i][v-1] is the round-i color of v.
class ColorHistory {
 public:
  ColorHistory(std::shared_ptr<ColorPalette> palette, std::vector<std::vector<ColorId>> rounds);

  int num_rounds() const { return static_cast<int>(rounds_.size()); }
  const std::vector<ColorId>& round(int i) const { return rounds_.at(static_cast<std::size_t>(i)); }
  ColorId color(int i, Vertex v) const { return round(i).at(static_cast<std::size_t>(v - 1)); }
  std::string render(int i, Vertex v) const { return palette_->render(color(i, v)); }

  Histogram histogram(int i) const;
  Partition partition(int i) const;
  // Partition of round i restricted to `vertices`, renumbered 1..k in order.
  Partition partition(int i, const std::vector<Vertex>& vertices) const;
  int num_classes(int i) const;

  // First i with partition(i) == partition(i+1), if seen among the rounds.
  std::optional<int> stable_round() const { return stable_round_; }

  const std::shared_ptr<ColorPalette>& palette() const { return palette_; }

 private:
  std::shared_ptr<ColorPalette> palette_;
  std::vector<std::vector<ColorId>> rounds_;
  std::optional<int> stable_round_;
};

// Runs max_rounds refinement rounds (the history has max_rounds + 1 entries).
// A null palette gets a fresh one.
ColorHistory cr_graph(const ColoredGraph& g, int max_rounds, bool include_own_color,
                      std::shared_ptr<ColorPalette> palette = nullptr);
ColorHistory cr_hypergraph(const Hypergraph& g, int max_rounds,
                           std::shared_ptr<ColorPalette> palette = nullptr);

struct Verdict {
  bool distinguished = false;
  std::optional<int> round;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Refines both structures in lockstep with one palette and stops at the first
// unbalanced round or once the partition of the disjoint union is stable.
// A missing round cap defaults to n_G + n_H + 1.
Verdict distinguishes_hypergraphs(const Hypergraph& g, const Hypergraph& h,
                                  std::optional<int> max_rounds = std::nullopt);
Verdict distinguishes_cgraphs(const ColoredGraph& g, const ColoredGraph& h, bool include_own_color,
                              std::optional<int> max_rounds = std::nullopt);

// Compares two precomputed histories that share a palette; the union
// stability test needs both histories to extend past the stable round.
Verdict compare_histories(const ColorHistory& g, const ColorHistory& h);

}  // namespace hyperhom
