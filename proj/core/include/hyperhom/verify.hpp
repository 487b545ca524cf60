#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperhom/enumerate.hpp"
#include "hyperhom/homcount.hpp"
#include "hyperhom/rational.hpp"
#include "hyperhom/refine.hpp"

namespace hyperhom {

struct CheckResult {
  bool ok = true;
  std::string detail;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// entries[i][j] = count(species, rows[i], cols[j]).
struct CountMatrixSlice {
  Family rows;
  Family cols;
  CountKind species;
  std::vector<std::vector<Count>> entries;

  static CountMatrixSlice build(Family rows, Family cols, const CountKind& species);
  const Count& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

// One summand of a three-factor decomposition through an intermediate G'.
struct DecompositionTerm {
  Hypergraph middle;
  Count left;
  Count aut;
};

// Nonzero left(G, G') for G' in `middles`, with Aut(G').
std::vector<DecompositionTerm> decomposition_terms(const CountKind& left, const Hypergraph& g,
                                                   const Family& middles);

// Sum over terms of left * right(G', H) / aut, compared with expected(G, H).
// Fails when the sum is not an integer or differs from the expected count.
CheckResult evaluate_decomposition(const std::vector<DecompositionTerm>& terms, const CountKind& right,
                                   const Hypergraph& h, const Count& expected);

// Intermediate families: connected, |E(G)| edges, at most |V(G)| vertices.
Family merge_middles(const Hypergraph& g);
// Connected, |E(G)| edges of size at most target_vertices, at most
// |E(G)| * target_vertices vertices.
Family leaf_middles(const Hypergraph& g, int target_vertices);

// InHom(G,H) via locally merging homomorphisms and locally injective
// incidence homomorphisms. G must be connected.
CheckResult check_decomposition_inhom(const Hypergraph& g, const Hypergraph& h);
// Hom(G,H) via locally merging and locally injective homomorphisms.
CheckResult check_decomposition_hom(const Hypergraph& g, const Hypergraph& h);
// LoInjInHom(G,H) via leaf-adding incidence homomorphisms and locally
// injective homomorphisms.
CheckResult check_decomposition_loinj(const Hypergraph& g, const Hypergraph& h);

// lo_me_hom must vanish above the diagonal and leaf_add_inhom below it, in
// family order; both diagonals must equal Aut. Other species throw.
CheckResult check_triangularity(const Family& family, const CountKind& species);

// InHom(B_k, G) for k = 1..|V(G)|.
std::vector<Count> single_edge_profile(const Hypergraph& g);

struct EdgeSizeCounts {
  // counts[i-1] = number of edges of size i.
  std::vector<Count> counts;
  Count total;
};

// Solves InHom(B_k, G) = sum_i i^k |E(G)|_i for k = 1..n. Throws
// std::domain_error when the solution is not a non-negative integer vector.
EdgeSizeCounts recover_edge_size_counts(const std::vector<Count>& inhom_bk, int n);

// Reports for the searches over Berge-acyclic patterns.
struct WitnessReport {
  Verdict refinement;
  bool isomorphic = false;
  std::optional<Hypergraph> witness;
  Count count_g = 0;
  Count count_h = 0;
  int budget = 0;
  int patterns_checked = 0;
  // Distinguished inputs with no witness up to the weight budget.
  bool budget_exhausted = false;
  // False only when refinement and the pattern counts contradict each other.
  bool consistent = true;
  std::string detail;
};

// 2 * (|V(G)| + |E(G)| + |V(H)| + |E(H)|).
int default_budget(const Hypergraph& g, const Hypergraph& h);

// Hom counts from connected Berge-acyclic patterns against refinement.
WitnessReport check_ba_hom_witness(const Hypergraph& g, const Hypergraph& h,
                                   std::optional<int> budget = std::nullopt);
// Same with incidence homomorphism counts.
WitnessReport check_ba_inhom_witness(const Hypergraph& g, const Hypergraph& h,
                                     std::optional<int> budget = std::nullopt);
// Simple inputs, simple Berge-acyclic patterns, species hom or inhom. Throws
// InvalidStructure on non-simple input.
WitnessReport check_simple_ba_witness(const Hypergraph& g, const Hypergraph& h, const CountKind& species,
                                      std::optional<int> budget = std::nullopt);

// Memoized counts from the connected Berge-acyclic patterns ba_level(w)[k]
// into one target.
class PatternCounts {
 public:
  PatternCounts(const CountKind& species, Hypergraph target);
  const Count& at(int weight, std::size_t k);
  const Hypergraph& target() const { return target_; }

 private:
  CountKind species_;
  Hypergraph target_;
  std::vector<std::vector<std::optional<Count>>> counts_;
};

// Shared search behind the check_*_witness functions: scans patterns by
// ascending weight up to the budget, skipping non-simple ones if asked.
// Isomorphic inputs are not scanned since counts are isomorphism invariant.
WitnessReport witness_search(const Verdict& verdict, bool isomorphic, PatternCounts& g_counts,
                             PatternCounts& h_counts, int budget, bool simple_patterns);

// Least s >= 1 with sum_{i<j} 2^(n-1) i^s < j^s for all j in 1..n.
int choose_s(int n);
bool choose_s_condition(int n, int s);

// All d with 0 <= d_i <= binom(n-1, i-1), i = 1..n.
std::vector<DegreeSequence> degree_sequence_domain(int n);

// sum_i d_i i^s.
Count degree_node(const DegreeSequence& d, int s);

// True when degree_node is injective on degree_sequence_domain(n).
bool nodes_distinct(int n, int s);

// InHom of build_b_rs(Bp, u, r, s) against the degree-sequence expansion.
// G must be simple.
CheckResult check_b_rs_formula(const Hypergraph& bp, Vertex u, const Hypergraph& g, int r, int s);

// Recovers the InHom counts of Bp split by the degree sequence of u's image
// from InHom(B_{r,s}, G), r = 0..|D_n|-1, and compares with the direct split.
// Bp needs a loop at u; G must be simple.
CheckResult check_degree_interpolation(const Hypergraph& bp, Vertex u, const Hypergraph& g);

// LoInjInHom restricted to connected Berge-acyclic patterns with m edges of
// size <= |V(G)| equals LeafAddInHom * Aut^-1 * LoInjHom on the same slice.
CheckResult check_leafadd_slice(int m, const Hypergraph& g);

}  // namespace hyperhom
