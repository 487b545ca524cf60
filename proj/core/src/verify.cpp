#include "hyperhom/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hyperhom/canonical.hpp"
#include "hyperhom/constructions.hpp"
#include "hyperhom/io.hpp"

namespace hyperhom {

namespace {

std::string show(const Hypergraph& g) { return to_json(g).dump(); }

// enum_connected results are reused across every H of a sweep.
const Family& connected_cached(int num_edges, int max_edge_size, int max_v) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Family>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{num_edges, max_edge_size, max_v}];
  if (!slot) slot = std::make_unique<Family>(enum_connected(num_edges, max_edge_size, max_v));
  return *slot;
}

void require_connected(const Hypergraph& g, const char* what) {
  if (!is_connected(g)) throw InvalidStructure(std::string(what) + ": G must be connected");
}

void require_simple(const Hypergraph& g, const char* what) {
  if (!g.is_simple()) throw InvalidStructure(std::string(what) + ": input must be simple");
}

Count power(const Count& base, int exp) {
  Count out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

Count binomial(int n, int k) {
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

CountMatrixSlice CountMatrixSlice::build(Family rows, Family cols, const CountKind& species) {
  CountMatrixSlice slice{std::move(rows), std::move(cols), species, {}};
  for (const auto& r : slice.rows) {
    std::vector<Count> row;
    for (const auto& c : slice.cols) row.push_back(count(species, r, c));
    slice.entries.push_back(std::move(row));
  }
  return slice;
}

std::vector<DecompositionTerm> decomposition_terms(const CountKind& left, const Hypergraph& g,
                                                   const Family& middles) {
  std::vector<DecompositionTerm> terms;
  for (const Hypergraph& mid : middles) {
    Count c = count(left, g, mid);
    if (c == 0) continue;
    terms.push_back({mid, std::move(c), count_aut(mid)});
  }
  return terms;
}

CheckResult evaluate_decomposition(const std::vector<DecompositionTerm>& terms, const CountKind& right,
                                   const Hypergraph& h, const Count& expected) {
  Rational sum = 0;
  for (const auto& t : terms) {
    const Count r = count(right, t.middle, h);
    if (r == 0) continue;
    sum += Rational(t.left * r) / Rational(t.aut);
  }
  sum.canonicalize();
  if (!is_integral(sum)) return CheckResult::fail("non-integral sum " + sum.get_str());
  if (sum.get_num() != expected) {
    return CheckResult::fail("sum " + sum.get_str() + " != expected " + expected.get_str());
  }
  return CheckResult::pass();
}

Family merge_middles(const Hypergraph& g) {
  const int n = std::max(1, g.num_vertices());
  return connected_cached(g.num_edges(), n, n);
}

Family leaf_middles(const Hypergraph& g, int target_vertices) {
  const int k = std::max(1, target_vertices);
  return connected_cached(g.num_edges(), k, std::max(1, g.num_edges() * k));
}

CheckResult check_decomposition_inhom(const Hypergraph& g, const Hypergraph& h) {
  require_connected(g, "check_decomposition_inhom");
  const auto terms = decomposition_terms(CountKind::lo_me_hom(), g, merge_middles(g));
  return evaluate_decomposition(terms, CountKind::lo_inj_inhom(), h, count(CountKind::inhom(), g, h));
}

CheckResult check_decomposition_hom(const Hypergraph& g, const Hypergraph& h) {
  require_connected(g, "check_decomposition_hom");
  const auto terms = decomposition_terms(CountKind::lo_me_hom(), g, merge_middles(g));
  return evaluate_decomposition(terms, CountKind::lo_inj_hom(), h, count(CountKind::hom(), g, h));
}

CheckResult check_decomposition_loinj(const Hypergraph& g, const Hypergraph& h) {
  require_connected(g, "check_decomposition_loinj");
  const auto terms =
      decomposition_terms(CountKind::leaf_add_inhom(), g, leaf_middles(g, h.num_vertices()));
  return evaluate_decomposition(terms, CountKind::lo_inj_hom(), h, count(CountKind::lo_inj_inhom(), g, h));
}

CheckResult check_triangularity(const Family& family, const CountKind& species) {
  bool lower;
  if (species.name == CountKind::lo_me_hom().name) {
    lower = true;
  } else if (species.name == CountKind::leaf_add_inhom().name) {
    lower = false;
  } else {
    throw std::invalid_argument("check_triangularity: species must be lomehom or leafaddinhom");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      const Count c = count(species, family[i], family[j]);
      if (i == j) {
        const Count aut = count_aut(family[i]);
        if (c != aut || c <= 0) {
          return CheckResult::fail(species.name + " diagonal at " + show(family[i]) + " is " + c.get_str() +
                                   ", Aut is " + aut.get_str());
        }
        continue;
      }
      const bool must_vanish = lower ? j > i : j < i;
      if (must_vanish && c != 0) {
        return CheckResult::fail(species.name + "(" + show(family[i]) + ", " + show(family[j]) +
                                 ") = " + c.get_str() + " outside the triangle");
      }
    }
  }
  return CheckResult::pass();
}

std::vector<Count> single_edge_profile(const Hypergraph& g) {
  std::vector<Count> out;
  for (int k = 1; k <= g.num_vertices(); ++k) out.push_back(count(CountKind::inhom(), single_edge(k), g));
  return out;
}

EdgeSizeCounts recover_edge_size_counts(const std::vector<Count>& inhom_bk, int n) {
  if (n < 0 || static_cast<int>(inhom_bk.size()) != n) {
    throw std::invalid_argument("recover_edge_size_counts: need exactly n values");
  }
  RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> b;
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = Rational(power(i, k));
    }
    b.emplace_back(inhom_bk[static_cast<std::size_t>(k - 1)]);
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) throw std::logic_error("recover_edge_size_counts: singular system");
  EdgeSizeCounts out;
  out.total = 0;
  for (const Rational& q : *x) {
    if (!is_integral(q) || q < 0) {
      throw std::domain_error("recover_edge_size_counts: solution " + q.get_str() + " is not a count");
    }
    out.counts.push_back(q.get_num());
    out.total += q.get_num();
  }
  return out;
}

int default_budget(const Hypergraph& g, const Hypergraph& h) { return 2 * (g.weight() + h.weight()); }

PatternCounts::PatternCounts(const CountKind& species, Hypergraph target)
    : species_(species), target_(std::move(target)) {}

const Count& PatternCounts::at(int weight, std::size_t k) {
  if (static_cast<int>(counts_.size()) < weight) counts_.resize(static_cast<std::size_t>(weight));
  auto& level = counts_[static_cast<std::size_t>(weight - 1)];
  const Family& patterns = ba_level(weight);
  if (level.size() < patterns.size()) level.resize(patterns.size());
  auto& slot = level[k];
  if (!slot) slot = count(species_, patterns[k], target_);
  return *slot;
}

WitnessReport witness_search(const Verdict& verdict, bool isomorphic, PatternCounts& g_counts,
                             PatternCounts& h_counts, int budget, bool simple_patterns) {
  WitnessReport r;
  r.refinement = verdict;
  r.isomorphic = isomorphic;
  r.budget = budget;
  if (isomorphic) {
    r.consistent = !verdict.distinguished;
    if (!r.consistent) r.detail = "refinement separates isomorphic inputs";
    return r;
  }
  for (int w = 1; w <= budget && !r.witness; ++w) {
    const Family& level = ba_level(w);
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (simple_patterns && !level[k].is_simple()) continue;
      ++r.patterns_checked;
      const Count& a = g_counts.at(w, k);
      const Count& b = h_counts.at(w, k);
      if (a != b) {
        r.witness = level[k];
        r.count_g = a;
        r.count_h = b;
        break;
      }
    }
  }
  if (r.witness) {
    r.consistent = verdict.distinguished;
    if (!r.consistent) r.detail = "pattern counts differ although refinement does not distinguish";
  } else if (verdict.distinguished) {
    r.budget_exhausted = true;
    r.detail = "no separating pattern up to weight " + std::to_string(budget);
  }
  return r;
}

namespace {

WitnessReport run_witness(const Hypergraph& g, const Hypergraph& h, const CountKind& species,
                          std::optional<int> budget, bool simple_patterns) {
  PatternCounts gc(species, g);
  PatternCounts hc(species, h);
  return witness_search(distinguishes_hypergraphs(g, h), is_isomorphic(g, h), gc, hc,
                        budget.value_or(default_budget(g, h)), simple_patterns);
}

}  // namespace

WitnessReport check_ba_hom_witness(const Hypergraph& g, const Hypergraph& h, std::optional<int> budget) {
  return run_witness(g, h, CountKind::hom(), budget, false);
}

WitnessReport check_ba_inhom_witness(const Hypergraph& g, const Hypergraph& h, std::optional<int> budget) {
  return run_witness(g, h, CountKind::inhom(), budget, false);
}

WitnessReport check_simple_ba_witness(const Hypergraph& g, const Hypergraph& h, const CountKind& species,
                                      std::optional<int> budget) {
  require_simple(g, "check_simple_ba_witness");
  require_simple(h, "check_simple_ba_witness");
  if (species.name != "hom" && species.name != "inhom") {
    throw std::invalid_argument("check_simple_ba_witness: species must be hom or inhom");
  }
  return run_witness(g, h, species, budget, true);
}

bool choose_s_condition(int n, int s) {
  const Count factor = power(2, n - 1);
  for (int j = 1; j <= n; ++j) {
    Count lhs = 0;
    for (int i = 1; i < j; ++i) lhs += factor * power(i, s);
    if (!(lhs < power(j, s))) return false;
  }
  return true;
}

int choose_s(int n) {
  if (n < 1) throw std::invalid_argument("choose_s: n must be positive");
  int s = 1;
  while (!choose_s_condition(n, s)) ++s;
  return s;
}

std::vector<DegreeSequence> degree_sequence_domain(int n) {
  if (n < 0) throw std::invalid_argument("degree_sequence_domain: negative n");
  std::vector<int> bound;
  for (int i = 1; i <= n; ++i) bound.push_back(static_cast<int>(binomial(n - 1, i - 1).get_si()));
  std::vector<DegreeSequence> out;
  DegreeSequence d{std::vector<int>(static_cast<std::size_t>(n), 0)};
  while (true) {
    out.push_back(d);
    int i = 0;
    while (i < n && d.entries[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)]) {
      d.entries[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++d.entries[static_cast<std::size_t>(i)];
  }
  return out;
}

Count degree_node(const DegreeSequence& d, int s) {
  Count sum = 0;
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    sum += d.entries[i] * power(static_cast<long>(i + 1), s);
  }
  return sum;
}

bool nodes_distinct(int n, int s) {
  std::set<Count> seen;
  for (const auto& d : degree_sequence_domain(n)) {
    if (!seen.insert(degree_node(d, s)).second) return false;
  }
  return true;
}

namespace {

// InHom(Bp, G) split by the degree sequence of the image of u.
std::map<DegreeSequence, Count> split_by_degree(const Hypergraph& bp, Vertex u, const Hypergraph& g) {
  const auto by_root = count_by_root_image(CountKind::inhom(), bp, u, g);
  std::map<DegreeSequence, Count> out;
  for (Vertex a = 1; a <= g.num_vertices(); ++a) {
    const Count& c = by_root[static_cast<std::size_t>(a - 1)];
    if (c != 0) out[degree_sequence(g, a)] += c;
  }
  return out;
}

}  // namespace

CheckResult check_b_rs_formula(const Hypergraph& bp, Vertex u, const Hypergraph& g, int r, int s) {
  require_simple(g, "check_b_rs_formula");
  const Count lhs = count(CountKind::inhom(), build_b_rs(bp, u, r, s), g);
  Count rhs = 0;
  for (const auto& [d, c] : split_by_degree(bp, u, g)) rhs += c * power(degree_node(d, s), r);
  if (lhs != rhs) return CheckResult::fail("direct " + lhs.get_str() + " != expansion " + rhs.get_str());
  return CheckResult::pass();
}

CheckResult check_degree_interpolation(const Hypergraph& bp, Vertex u, const Hypergraph& g) {
  require_simple(g, "check_degree_interpolation");
  if (u < 1 || u > bp.num_vertices()) throw InvalidStructure("check_degree_interpolation: u out of range");
  const bool has_loop = std::any_of(bp.edges().begin(), bp.edges().end(),
                                    [u](const Edge& e) { return e.size() == 1 && e[0] == u; });
  if (!has_loop) throw InvalidStructure("check_degree_interpolation: Bp needs a loop at u");

  const int n = g.num_vertices();
  const auto domain = degree_sequence_domain(n);
  const int s = choose_s(std::max(1, n));
  std::vector<Count> nodes;
  for (const auto& d : domain) nodes.push_back(degree_node(d, s));
  if (std::set<Count>(nodes.begin(), nodes.end()).size() != nodes.size()) {
    return CheckResult::fail("degree nodes are not pairwise distinct");
  }

  // Row r: InHom(B_{r,s}, G) = sum_d x_d * node_d^r.
  const std::size_t size = domain.size();
  RationalMatrix a(size, std::vector<Rational>(size));
  std::vector<Rational> b;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t k = 0; k < size; ++k) a[r][k] = Rational(power(nodes[k], static_cast<int>(r)));
    b.emplace_back(count(CountKind::inhom(), build_b_rs(bp, u, static_cast<int>(r), s), g));
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return CheckResult::fail("interpolation system is singular");

  const auto direct = split_by_degree(bp, u, g);
  for (std::size_t k = 0; k < size; ++k) {
    auto it = direct.find(domain[k]);
    const Count expected = it == direct.end() ? Count(0) : it->second;
    const Rational& got = (*x)[k];
    if (!is_integral(got) || got.get_num() != expected) {
      return CheckResult::fail("recovered " + got.get_str() + " != direct " + expected.get_str());
    }
  }
  return CheckResult::pass();
}

CheckResult check_leafadd_slice(int m, const Hypergraph& g) {
  const int n = g.num_vertices();
  if (n < 1) throw InvalidStructure("check_leafadd_slice: G needs a vertex");
  const Family family = enum_ba_m_n(m, n);
  const auto leaf = CountMatrixSlice::build(family, family, CountKind::leaf_add_inhom());
  std::vector<Count> aut;
  std::vector<Count> right;
  for (const auto& b : family) {
    aut.push_back(count_aut(b));
    right.push_back(count(CountKind::lo_inj_hom(), b, g));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (leaf.at(i, j) == 0 || right[j] == 0) continue;
      sum += Rational(leaf.at(i, j) * right[j]) / Rational(aut[j]);
    }
    sum.canonicalize();
    const Count expected = count(CountKind::lo_inj_inhom(), family[i], g);
    if (!is_integral(sum) || sum.get_num() != expected) {
      return CheckResult::fail("row " + show(family[i]) + ": slice product " + sum.get_str() + " != " +
                               expected.get_str());
    }
  }
  return CheckResult::pass();
}

}  // namespace hyperhom
