#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

using Count = mpz_class;

enum class Base { kHom, kInHom };
enum class Locality { kNone, kInjective, kBijective };
enum class VertexMode { kAny, kInjective, kSurjective, kBijective };
enum class EdgeMode { kAny, kBijective };

// Selects which pairs (hv, he) from F to G are counted. A pair always needs
// hv(e) = he(e) (kHom) or hv(e) ⊆ he(e) (kInHom) for every edge e of F; the
// remaining fields add restrictions.
struct CountKind {
  std::string name = "custom";
  Base base = Base::kHom;
  // Restriction of hv to each edge onto its image edge.
  Locality locality = Locality::kNone;
  // hv^{-1}(he(e) ∩ im hv) ⊆ e for every edge e.
  bool strong = false;
  VertexMode hv_mode = VertexMode::kAny;
  EdgeMode he_mode = EdgeMode::kAny;
  // hv identifies exactly the classes of merge_relation.
  bool merge_exact = false;
  // Every target vertex outside im hv is a leaf of G.
  bool leaves_only_missed = false;
  // Species defined only for connected sources reject disconnected F.
  bool requires_connected = false;

  static CountKind hom();
  static CountKind inhom();
  static CountKind lo_inj_inhom();
  static CountKind lo_inj_hom();
  // Same count as lo_inj_hom; kept as the second formulation.
  static CountKind lo_bij_inhom();
  static CountKind lo_me_hom();
  static CountKind leaf_add_inhom();
  static CountKind aut();
};

// Accepts hom, inhom, loinjinhom, loinjhom, lobijinhom, lomehom,
// leafaddinhom and aut.
std::optional<CountKind> kind_from_name(std::string_view name);
std::vector<std::string> kind_names();

// Exact number of mapping pairs of the given kind. Throws InvalidStructure
// when the kind requires a connected F and F is not, or when either side has
// more than 64 vertices.
Count count(const CountKind& kind, const Hypergraph& f, const Hypergraph& g);

// Same pairs as count(), split by the image of `root`: entry a-1 counts the
// pairs with hv(root) = a.
std::vector<Count> count_by_root_image(const CountKind& kind, const Hypergraph& f, Vertex root,
                                       const Hypergraph& g);

Count count_aut(const Hypergraph& g);

// Color- and adjacency-preserving vertex maps T -> G. Uses a tree dynamic
// program when T is a tree and enumeration otherwise. Throws InvalidStructure
// for disconnected T.
Count count_hom_cgraph(const ColoredGraph& t, const ColoredGraph& g);

// Plain enumeration of every vertex map; no connectivity requirement.
Count count_hom_cgraph_brute(const ColoredGraph& t, const ColoredGraph& g);

bool is_tree(const ColoredGraph& t);
bool is_connected(const ColoredGraph& t);

}  // namespace hyperhom
