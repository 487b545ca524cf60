#include "hyperhom/homcount.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

#include "hyperhom/constructions.hpp"

namespace hyperhom {

CountKind CountKind::hom() {
  CountKind k;
  k.name = "hom";
  return k;
}

CountKind CountKind::inhom() {
  CountKind k;
  k.name = "inhom";
  k.base = Base::kInHom;
  return k;
}

CountKind CountKind::lo_inj_inhom() {
  CountKind k;
  k.name = "loinjinhom";
  k.base = Base::kInHom;
  k.locality = Locality::kInjective;
  k.requires_connected = true;
  return k;
}

CountKind CountKind::lo_inj_hom() {
  CountKind k;
  k.name = "loinjhom";
  k.base = Base::kHom;
  k.locality = Locality::kInjective;
  k.requires_connected = true;
  return k;
}

CountKind CountKind::lo_bij_inhom() {
  CountKind k;
  k.name = "lobijinhom";
  k.base = Base::kInHom;
  k.locality = Locality::kBijective;
  k.requires_connected = true;
  return k;
}

CountKind CountKind::lo_me_hom() {
  CountKind k;
  k.name = "lomehom";
  k.base = Base::kHom;
  k.merge_exact = true;
  k.hv_mode = VertexMode::kSurjective;
  k.he_mode = EdgeMode::kBijective;
  k.requires_connected = true;
  return k;
}

CountKind CountKind::leaf_add_inhom() {
  CountKind k;
  k.name = "leafaddinhom";
  k.base = Base::kInHom;
  k.strong = true;
  k.hv_mode = VertexMode::kInjective;
  k.he_mode = EdgeMode::kBijective;
  k.leaves_only_missed = true;
  k.requires_connected = true;
  return k;
}

CountKind CountKind::aut() {
  CountKind k;
  k.name = "aut";
  k.base = Base::kHom;
  k.hv_mode = VertexMode::kBijective;
  k.he_mode = EdgeMode::kBijective;
  return k;
}

std::optional<CountKind> kind_from_name(std::string_view name) {
  for (auto make : {&CountKind::hom, &CountKind::inhom, &CountKind::lo_inj_inhom, &CountKind::lo_inj_hom,
                    &CountKind::lo_bij_inhom, &CountKind::lo_me_hom, &CountKind::leaf_add_inhom,
                    &CountKind::aut}) {
    CountKind k = make();
    if (k.name == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> kind_names() {
  return {"hom", "inhom", "loinjinhom", "loinjhom", "lobijinhom", "lomehom", "leafaddinhom", "aut"};
}

namespace {

using Mask = std::uint64_t;

Mask bit(int zero_based) { return Mask{1} << zero_based; }

class PairEnumerator {
 public:
  using Visit = std::function<void(const std::vector<int>& hv, const Count& weight)>;

  PairEnumerator(const CountKind& kind, const Hypergraph& f, const Hypergraph& g)
      : kind_(kind), f_(f), g_(g), nf_(f.num_vertices()), ng_(g.num_vertices()) {
    if (nf_ > 64 || ng_ > 64) throw InvalidStructure("count: structures above 64 vertices are not supported");
    if (kind.requires_connected && !is_connected(f)) {
      throw InvalidStructure("count: " + kind.name + " requires a connected source hypergraph");
    }
    for (const Edge& e : g.edges()) {
      Mask m = 0;
      for (Vertex v : e) m |= bit(v - 1);
      g_masks_.push_back(m);
    }
    for (const Edge& e : f.edges()) {
      Mask m = 0;
      for (Vertex v : e) m |= bit(v - 1);
      f_masks_.push_back(m);
    }
    build_order();
  }

  void run(const Visit& visit) {
    if (kind_.he_mode == EdgeMode::kBijective && f_.num_edges() != g_.num_edges()) return;
    if (nf_ < ng_ && (kind_.hv_mode == VertexMode::kSurjective || kind_.hv_mode == VertexMode::kBijective)) return;
    if (nf_ > ng_ && (kind_.hv_mode == VertexMode::kInjective || kind_.hv_mode == VertexMode::kBijective)) return;
    if (nf_ > 0 && ng_ == 0) return;
    hv_.assign(static_cast<std::size_t>(nf_), 0);
    use_count_.assign(static_cast<std::size_t>(ng_) + 1, 0);
    covered_ = 0;
    visit_ = &visit;
    extend(0);
  }

 private:
  bool injective_hv() const {
    return kind_.hv_mode == VertexMode::kInjective || kind_.hv_mode == VertexMode::kBijective;
  }
  bool surjective_hv() const {
    return kind_.hv_mode == VertexMode::kSurjective || kind_.hv_mode == VertexMode::kBijective;
  }

  // Breadth-first over the incidence structure so edges close early.
  void build_order() {
    std::vector<char> seen_v(static_cast<std::size_t>(nf_), 0);
    std::vector<char> seen_e(static_cast<std::size_t>(f_.num_edges()), 0);
    for (Vertex start = 1; start <= nf_; ++start) {
      if (seen_v[static_cast<std::size_t>(start - 1)]) continue;
      std::vector<Vertex> queue{start};
      seen_v[static_cast<std::size_t>(start - 1)] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        order_.push_back(v);
        for (int j : f_.incident_edges(v)) {
          if (seen_e[static_cast<std::size_t>(j)]) continue;
          seen_e[static_cast<std::size_t>(j)] = 1;
          for (Vertex u : f_.edge(j)) {
            if (!seen_v[static_cast<std::size_t>(u - 1)]) {
              seen_v[static_cast<std::size_t>(u - 1)] = 1;
              queue.push_back(u);
            }
          }
        }
      }
    }
    std::vector<int> position(static_cast<std::size_t>(nf_));
    for (std::size_t k = 0; k < order_.size(); ++k) position[static_cast<std::size_t>(order_[k] - 1)] = static_cast<int>(k);
    closing_.assign(order_.size(), {});
    for (int j = 0; j < f_.num_edges(); ++j) {
      int last = 0;
      for (Vertex v : f_.edge(j)) last = std::max(last, position[static_cast<std::size_t>(v - 1)]);
      closing_[static_cast<std::size_t>(last)].push_back(j);
    }
  }

  Mask image_mask(int edge) const {
    Mask m = 0;
    for (Vertex v : f_.edge(edge)) m |= bit(hv_[static_cast<std::size_t>(v - 1)] - 1);
    return m;
  }

  // Conditions of one edge that do not depend on the rest of hv.
  bool edge_compatible(int edge, Mask image, int target) const {
    const Mask t = g_masks_[static_cast<std::size_t>(target)];
    const auto size = static_cast<int>(f_.edge(edge).size());
    const bool exact = kind_.base == Base::kHom || kind_.locality == Locality::kBijective;
    if (exact ? t != image : (image & ~t) != 0) return false;
    if (kind_.locality != Locality::kNone && std::popcount(image) != size) return false;
    return true;
  }

  bool edge_feasible(int edge) const {
    const Mask image = image_mask(edge);
    for (int t = 0; t < g_.num_edges(); ++t) {
      if (edge_compatible(edge, image, t)) return true;
    }
    return false;
  }

  void extend(std::size_t depth) {
    if (surjective_hv()) {
      const int uncovered = ng_ - std::popcount(covered_);
      if (uncovered > static_cast<int>(order_.size() - depth)) return;
    }
    if (depth == order_.size()) {
      finish();
      return;
    }
    const Vertex v = order_[depth];
    for (int a = 1; a <= ng_; ++a) {
      if (injective_hv() && use_count_[static_cast<std::size_t>(a)] > 0) continue;
      hv_[static_cast<std::size_t>(v - 1)] = a;
      ++use_count_[static_cast<std::size_t>(a)];
      const Mask saved = covered_;
      covered_ |= bit(a - 1);
      bool ok = true;
      for (int j : closing_[depth]) {
        if (!edge_feasible(j)) {
          ok = false;
          break;
        }
      }
      if (ok) extend(depth + 1);
      covered_ = saved;
      --use_count_[static_cast<std::size_t>(a)];
    }
  }

  bool merge_classes_match() const {
    // Merge classes refine the fibres of hv, so equality is a count check.
    const Partition classes = merge_relation(f_, hv_);
    return static_cast<int>(classes.size()) == std::popcount(covered_);
  }

  void finish() {
    if (kind_.leaves_only_missed) {
      for (int a = 1; a <= ng_; ++a) {
        if (!(covered_ & bit(a - 1)) && !g_.is_leaf(a)) return;
      }
    }
    if (kind_.merge_exact && !merge_classes_match()) return;

    std::vector<Mask> preimage(static_cast<std::size_t>(g_.num_edges()), 0);
    if (kind_.strong) {
      for (int t = 0; t < g_.num_edges(); ++t) {
        for (int u = 0; u < nf_; ++u) {
          if (g_masks_[static_cast<std::size_t>(t)] & bit(hv_[static_cast<std::size_t>(u)] - 1)) {
            preimage[static_cast<std::size_t>(t)] |= bit(u);
          }
        }
      }
    }
    std::vector<std::vector<int>> compat(static_cast<std::size_t>(f_.num_edges()));
    for (int j = 0; j < f_.num_edges(); ++j) {
      const Mask image = image_mask(j);
      for (int t = 0; t < g_.num_edges(); ++t) {
        if (!edge_compatible(j, image, t)) continue;
        if (kind_.strong &&
            (preimage[static_cast<std::size_t>(t)] & ~f_masks_[static_cast<std::size_t>(j)]) != 0) {
          continue;
        }
        compat[static_cast<std::size_t>(j)].push_back(t);
      }
      if (compat[static_cast<std::size_t>(j)].empty()) return;
    }
    Count weight = 1;
    if (kind_.he_mode == EdgeMode::kAny) {
      for (const auto& c : compat) weight *= static_cast<unsigned long>(c.size());
    } else {
      std::vector<char> taken(static_cast<std::size_t>(g_.num_edges()), 0);
      weight = count_matchings(compat, taken, 0);
    }
    if (weight != 0) (*visit_)(hv_, weight);
  }

  static Count count_matchings(const std::vector<std::vector<int>>& compat, std::vector<char>& taken,
                               std::size_t row) {
    if (row == compat.size()) return 1;
    Count total = 0;
    for (int t : compat[row]) {
      if (taken[static_cast<std::size_t>(t)]) continue;
      taken[static_cast<std::size_t>(t)] = 1;
      total += count_matchings(compat, taken, row + 1);
      taken[static_cast<std::size_t>(t)] = 0;
    }
    return total;
  }

  const CountKind& kind_;
  const Hypergraph& f_;
  const Hypergraph& g_;
  const int nf_;
  const int ng_;
  std::vector<Mask> g_masks_;
  std::vector<Mask> f_masks_;
  std::vector<Vertex> order_;
  std::vector<std::vector<int>> closing_;
  std::vector<int> hv_;
  std::vector<int> use_count_;
  Mask covered_ = 0;
  const Visit* visit_ = nullptr;
};

}  // namespace

Count count(const CountKind& kind, const Hypergraph& f, const Hypergraph& g) {
  Count total = 0;
  PairEnumerator(kind, f, g).run([&](const std::vector<int>&, const Count& w) { total += w; });
  return total;
}

std::vector<Count> count_by_root_image(const CountKind& kind, const Hypergraph& f, Vertex root,
                                       const Hypergraph& g) {
  if (root < 1 || root > f.num_vertices()) throw InvalidStructure("count_by_root_image: root out of range");
  std::vector<Count> out(static_cast<std::size_t>(g.num_vertices()), 0);
  PairEnumerator(kind, f, g).run([&](const std::vector<int>& hv, const Count& w) {
    out[static_cast<std::size_t>(hv[static_cast<std::size_t>(root - 1)] - 1)] += w;
  });
  return out;
}

Count count_aut(const Hypergraph& g) { return count(CountKind::aut(), g, g); }

bool is_connected(const ColoredGraph& t) {
  const int n = t.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : t.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(u - 1)]) {
        seen[static_cast<std::size_t>(u - 1)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

bool is_tree(const ColoredGraph& t) {
  return t.num_vertices() >= 1 && t.num_edges() == t.num_vertices() - 1 && is_connected(t);
}

Count count_hom_cgraph_brute(const ColoredGraph& t, const ColoredGraph& g) {
  const int nt = t.num_vertices();
  const int ng = g.num_vertices();
  std::vector<Vertex> map(static_cast<std::size_t>(nt), 0);
  Count total = 0;
  std::function<void(int)> place = [&](int v) {
    if (v > nt) {
      ++total;
      return;
    }
    for (Vertex a = 1; a <= ng; ++a) {
      if (g.color(a) != t.color(v)) continue;
      bool ok = true;
      for (Vertex u : t.neighbors(v)) {
        if (u < v && !g.adjacent(map[static_cast<std::size_t>(u - 1)], a)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v - 1)] = a;
      place(v + 1);
    }
  };
  place(1);
  return total;
}

Count count_hom_cgraph(const ColoredGraph& t, const ColoredGraph& g) {
  if (!is_connected(t)) throw InvalidStructure("count_hom_cgraph: pattern must be connected");
  if (t.num_vertices() == 0) return 1;
  if (!is_tree(t)) return count_hom_cgraph_brute(t, g);

  const int nt = t.num_vertices();
  const int ng = g.num_vertices();
  // Root at 1; children are processed before parents in reverse DFS order.
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(nt) + 1, 0);
  std::vector<Vertex> stack{1};
  parent[1] = -1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex u : t.neighbors(v)) {
      if (parent[static_cast<std::size_t>(u)] == 0) {
        parent[static_cast<std::size_t>(u)] = v;
        stack.push_back(u);
      }
    }
  }
  std::vector<std::vector<Count>> table(static_cast<std::size_t>(nt) + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex x = *it;
    auto& row = table[static_cast<std::size_t>(x)];
    row.assign(static_cast<std::size_t>(ng) + 1, 0);
    for (Vertex a = 1; a <= ng; ++a) {
      if (g.color(a) == t.color(x)) row[static_cast<std::size_t>(a)] = 1;
    }
    for (Vertex c : t.neighbors(x)) {
      if (c == parent[static_cast<std::size_t>(x)]) continue;
      const auto& child = table[static_cast<std::size_t>(c)];
      for (Vertex a = 1; a <= ng; ++a) {
        auto& cell = row[static_cast<std::size_t>(a)];
        if (cell == 0) continue;
        Count sum = 0;
        for (Vertex b : g.neighbors(a)) sum += child[static_cast<std::size_t>(b)];
        cell *= sum;
      }
    }
  }
  Count total = 0;
  for (Vertex a = 1; a <= ng; ++a) total += table[1][static_cast<std::size_t>(a)];
  return total;
}

}  // namespace hyperhom
