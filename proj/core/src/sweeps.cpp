#include "hyperhom/sweeps.hpp"

#include <array>
#include <map>
#include <random>

#include "hyperhom/canonical.hpp"
#include "hyperhom/constructions.hpp"
#include "hyperhom/digraphs.hpp"
#include "hyperhom/enumerate.hpp"
#include "hyperhom/io.hpp"
#include "hyperhom/parallel.hpp"
#include "hyperhom/refine.hpp"
#include "hyperhom/verify.hpp"

namespace hyperhom {

void SweepResult::fail(std::string what) {
  ++violations;
  if (first_failure.empty()) first_failure = std::move(what);
}

void SweepResult::merge(const SweepResult& other) {
  checked += other.checked;
  violations += other.violations;
  budget_exhausted += other.budget_exhausted;
  if (first_failure.empty()) first_failure = other.first_failure;
}

nlohmann::json SweepResult::to_json() const {
  nlohmann::json j{{"check", name},
                   {"ok", ok()},
                   {"checked", checked},
                   {"violations", violations},
                   {"budget_exhausted", budget_exhausted}};
  if (!first_failure.empty()) j["detail"] = first_failure;
  return j;
}

namespace {

std::string show(const Hypergraph& g) { return to_json(g).dump(); }
std::string show(const Digraph& g) { return to_json(g).dump(); }
std::string show(const ColoredGraph& g) { return to_json(g).dump(); }

template <class Fn>
SweepResult run_tasks(const std::string& name, std::size_t n, const SweepOptions& opt, Fn&& task) {
  SweepResult total;
  total.name = name;
  for (const auto& part : parallel_map<SweepResult>(n, opt.workers, task)) total.merge(part);
  return total;
}

Family filter_weight(const Family& f, int max_weight) {
  Family out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].weight() > max_weight) continue;
    out.members.push_back(f[i]);
    out.encodings.push_back(f.encodings[i]);
  }
  return out;
}

// Connected G with |V| + |E| <= 5.
Family decomposition_sources() { return filter_weight(enum_hypergraphs(4, 4, 4, false, true), 5); }

// H with |V| <= 3, |E| <= 2, edges of size <= 3.
Family decomposition_targets() { return enum_hypergraphs(3, 2, 3, false, false); }

template <class Check>
SweepResult decomposition_sweep(const std::string& name, const SweepOptions& opt, Check check) {
  const Family gs = decomposition_sources();
  const Family hs = decomposition_targets();
  return run_tasks(name, gs.size(), opt, [&](std::size_t i) {
    SweepResult r;
    for (const Hypergraph& h : hs) {
      ++r.checked;
      if (auto res = check(gs[i], h); !res.ok) r.fail(show(gs[i]) + " vs " + show(h) + ": " + res.detail);
    }
    return r;
  });
}

enum class WitnessMode { kAll, kSimple };

SweepResult witness_sweep(const std::string& name, const CountKind& species, WitnessMode mode,
                          const SweepOptions& opt) {
  const bool simple = mode == WitnessMode::kSimple;
  const Family graphs = enum_hypergraphs(4, 3, 4, simple, false);
  return run_tasks(name, graphs.size(), opt, [&](std::size_t i) {
    SweepResult r;
    PatternCounts gc(species, graphs[i]);
    for (std::size_t j = i; j < graphs.size(); ++j) {
      PatternCounts hc(species, graphs[j]);
      const Hypergraph& g = graphs[i];
      const Hypergraph& h = graphs[j];
      const int budget = opt.budget.value_or(default_budget(g, h));
      // Family members are pairwise non-isomorphic.
      const WitnessReport rep =
          witness_search(distinguishes_hypergraphs(g, h), i == j, gc, hc, budget, simple);
      ++r.checked;
      if (!rep.consistent) r.fail(show(g) + " vs " + show(h) + ": " + rep.detail);
      if (rep.budget_exhausted) {
        ++r.budget_exhausted;
        if (r.first_failure.empty()) r.first_failure = show(g) + " vs " + show(h) + ": " + rep.detail;
      }
    }
    return r;
  });
}

Hypergraph nested() { return Hypergraph(3, {{1, 2}, {1, 2, 3}}); }

}  // namespace

SweepResult sweep_refinement_example(const SweepOptions&) {
  SweepResult r;
  r.name = "refinement-example";
  const ColorHistory h = cr_hypergraph(nested(), 1);
  ++r.checked;
  if (h.partition(1) != Partition{{1, 2}, {3}}) r.fail("round-1 classes differ from {v1,v2},{v3}");
  const std::string shared = "{{{{1,1}},{{1,1,1}}}}";
  const std::string single = "{{{{1,1,1}}}}";
  for (Vertex v : {1, 2}) {
    ++r.checked;
    if (h.render(1, v) != shared) r.fail("v" + std::to_string(v) + " has color " + h.render(1, v));
  }
  ++r.checked;
  if (h.render(1, 3) != single) r.fail("v3 has color " + h.render(1, 3));
  return r;
}

SweepResult sweep_incidence_refinement(const SweepOptions& opt) {
  const Family graphs = enum_hypergraphs(4, 3, 4, false, false);
  return run_tasks("incidence-refinement", graphs.size(), opt, [&](std::size_t i) {
    SweepResult r;
    const Hypergraph& g = graphs[i];
    const ColoredGraph inc_g = incidence_graph(g);
    const int rounds = g.num_vertices() + 2;
    const ColorHistory hyper = cr_hypergraph(g, rounds);
    const ColorHistory graph = cr_graph(inc_g, 2 * rounds, false);
    std::vector<Vertex> vertex_nodes(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 1; v <= g.num_vertices(); ++v) vertex_nodes[static_cast<std::size_t>(v - 1)] = v;
    for (int k = 0; k <= rounds; ++k) {
      ++r.checked;
      if (hyper.partition(k) != graph.partition(2 * k, vertex_nodes)) {
        r.fail(show(g) + ": round " + std::to_string(k) + " partition differs from incidence round " +
               std::to_string(2 * k));
      }
    }
    for (std::size_t j = i; j < graphs.size(); ++j) {
      const Hypergraph& h = graphs[j];
      const ColoredGraph inc_h = incidence_graph(h);
      const bool d = distinguishes_hypergraphs(g, h).distinguished;
      for (bool own : {false, true}) {
        ++r.checked;
        if (distinguishes_cgraphs(inc_g, inc_h, own).distinguished != d) {
          r.fail(show(g) + " vs " + show(h) + ": verdicts differ (own color " + (own ? "on" : "off") + ")");
        }
      }
    }
    return r;
  });
}

SweepResult sweep_decomposition_inhom(const SweepOptions& opt) {
  return decomposition_sweep("decomposition-inhom", opt, check_decomposition_inhom);
}

SweepResult sweep_decomposition_hom(const SweepOptions& opt) {
  return decomposition_sweep("decomposition-hom", opt, check_decomposition_hom);
}

SweepResult sweep_decomposition_loinj(const SweepOptions& opt) {
  return decomposition_sweep("decomposition-loinj", opt, check_decomposition_loinj);
}

SweepResult sweep_triangularity(const SweepOptions&) {
  SweepResult r;
  r.name = "triangularity";
  for (const Family& family : {enum_ba(5), enum_hypergraphs(3, 2, 3, false, true)}) {
    for (const CountKind& species : {CountKind::lo_me_hom(), CountKind::leaf_add_inhom()}) {
      r.checked += static_cast<long>(family.size() * family.size());
      if (auto res = check_triangularity(family, species); !res.ok) r.fail(res.detail);
    }
  }
  return r;
}

SweepResult sweep_edge_size_recovery(const SweepOptions& opt) {
  const Family graphs = enum_hypergraphs(3, 3, 3, false, false);
  return run_tasks("edge-size-recovery", graphs.size(), opt, [&](std::size_t i) {
    SweepResult r;
    const Hypergraph& g = graphs[i];
    const int n = g.num_vertices();
    std::vector<Count> expected(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) ++expected[e.size() - 1];
    ++r.checked;
    try {
      const EdgeSizeCounts got = recover_edge_size_counts(single_edge_profile(g), n);
      if (got.counts != expected || got.total != g.num_edges()) r.fail(show(g) + ": wrong histogram");
    } catch (const std::exception& e) {
      r.fail(show(g) + ": " + e.what());
    }
    return r;
  });
}

SweepResult sweep_ba_hom_witness(const SweepOptions& opt) {
  return witness_sweep("ba-hom-witness", CountKind::hom(), WitnessMode::kAll, opt);
}

SweepResult sweep_ba_inhom_witness(const SweepOptions& opt) {
  return witness_sweep("ba-inhom-witness", CountKind::inhom(), WitnessMode::kAll, opt);
}

SweepResult sweep_simple_ba_hom_witness(const SweepOptions& opt) {
  return witness_sweep("simple-ba-hom-witness", CountKind::hom(), WitnessMode::kSimple, opt);
}

SweepResult sweep_simple_ba_inhom_witness(const SweepOptions& opt) {
  return witness_sweep("simple-ba-inhom-witness", CountKind::inhom(), WitnessMode::kSimple, opt);
}

SweepResult sweep_b_rs_formula(const SweepOptions& opt) {
  const Family bases = enum_ba(4);
  const Family graphs = enum_hypergraphs(3, 7, 3, true, false);
  return run_tasks("b-rs-formula", graphs.size(), opt, [&](std::size_t i) {
    SweepResult r;
    for (const Hypergraph& bp : bases) {
      for (Vertex u = 1; u <= bp.num_vertices(); ++u) {
        for (int rr = 0; rr <= 2; ++rr) {
          for (int s = 1; s <= 2; ++s) {
            ++r.checked;
            if (auto res = check_b_rs_formula(bp, u, graphs[i], rr, s); !res.ok) {
              r.fail(show(bp) + " u=" + std::to_string(u) + " r=" + std::to_string(rr) + " s=" +
                     std::to_string(s) + " into " + show(graphs[i]) + ": " + res.detail);
            }
          }
        }
      }
    }
    return r;
  });
}

SweepResult sweep_choose_s(const SweepOptions&) {
  SweepResult r;
  r.name = "choose-s";
  for (int n = 1; n <= 6; ++n) {
    ++r.checked;
    const int s = choose_s(n);
    if (!choose_s_condition(n, s)) r.fail("n=" + std::to_string(n) + ": s=" + std::to_string(s) + " fails");
    if (s > 1 && choose_s_condition(n, s - 1)) {
      r.fail("n=" + std::to_string(n) + ": s=" + std::to_string(s) + " is not the least");
    }
  }
  return r;
}

SweepResult sweep_degree_nodes(const SweepOptions&) {
  SweepResult r;
  r.name = "degree-nodes";
  for (int n = 1; n <= 4; ++n) {
    ++r.checked;
    if (!nodes_distinct(n, choose_s(n))) r.fail("n=" + std::to_string(n) + ": nodes collide");
  }
  return r;
}

SweepResult sweep_degree_interpolation(const SweepOptions& opt) {
  const std::vector<Hypergraph> bases = {
      Hypergraph(1, {{1}}),
      Hypergraph(2, {{1}, {1, 2}}),
      Hypergraph(2, {{1}, {2}, {1, 2}}),
      Hypergraph(3, {{1}, {1, 2}, {2, 3}}),
  };
  const Family graphs = enum_hypergraphs(2, 3, 2, true, false);
  Family two;
  for (const auto& g : graphs) {
    if (g.num_vertices() == 2) two.members.push_back(g);
  }
  return run_tasks("degree-interpolation", two.size(), opt, [&](std::size_t i) {
    SweepResult r;
    for (const Hypergraph& bp : bases) {
      ++r.checked;
      if (auto res = check_degree_interpolation(bp, 1, two[i]); !res.ok) {
        r.fail(show(bp) + " into " + show(two[i]) + ": " + res.detail);
      }
    }
    return r;
  });
}

SweepResult sweep_leafadd_slice(const SweepOptions& opt) {
  const Family graphs = enum_hypergraphs(3, 2, 3, false, false);
  return run_tasks("leafadd-slice", graphs.size(), opt, [&](std::size_t i) {
    SweepResult r;
    for (int m = 0; m <= 2; ++m) {
      ++r.checked;
      if (auto res = check_leafadd_slice(m, graphs[i]); !res.ok) {
        r.fail("m=" + std::to_string(m) + " " + show(graphs[i]) + ": " + res.detail);
      }
    }
    return r;
  });
}

SweepResult sweep_tensor_multiplicativity(const SweepOptions& opt) {
  const DigraphFamily small = enum_digraphs(2);
  SweepResult r = run_tasks("tensor-multiplicativity", small.size(), opt, [&](std::size_t i) {
    SweepResult part;
    for (const Digraph& g : small) {
      for (const Digraph& h : small) {
        ++part.checked;
        if (!check_multiplicativity(small[i], g, h)) {
          part.fail(show(small[i]) + " into " + show(g) + " x " + show(h));
        }
      }
    }
    return part;
  });
  std::mt19937_64 rng(opt.seed);
  auto random_digraph = [&rng] {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = 1; v <= n; ++v) {
        if (rng() & 1u) arcs.emplace_back(u, v);
      }
    }
    return Digraph(n, arcs);
  };
  std::vector<std::array<Digraph, 3>> triples;
  for (int t = 0; t < 200; ++t) {
    Digraph f = random_digraph();
    Digraph g = random_digraph();
    Digraph h = random_digraph();
    triples.push_back({std::move(f), std::move(g), std::move(h)});
  }
  r.merge(run_tasks("", triples.size(), opt, [&](std::size_t i) {
    SweepResult part;
    ++part.checked;
    const auto& [f, g, h] = triples[i];
    if (!check_multiplicativity(f, g, h)) part.fail(show(f) + " into " + show(g) + " x " + show(h));
    return part;
  }));
  return r;
}

SweepResult sweep_a3_characterization(const SweepOptions& opt) {
  const DigraphFamily all = enum_digraphs(4);
  return run_tasks("a3-characterization", all.size(), opt, [&](std::size_t i) {
    SweepResult r;
    for (int n = 0; n <= 4; ++n) {
      ++r.checked;
      if (in_A_n(all[i], n) != in_A_n_by_paths(all[i], n)) {
        r.fail(show(all[i]) + ": membership in A_" + std::to_string(n) + " disagrees");
      }
    }
    return r;
  });
}

SweepResult sweep_a3_distinguish(const SweepOptions& opt) {
  const DigraphFamily graphs = enum_digraphs(3);
  const DigraphFamily patterns = enum_dags_A3(4);
  const auto profiles = parallel_map<std::vector<Count>>(graphs.size(), opt.workers, [&](std::size_t i) {
    std::vector<Count> p;
    for (const Digraph& f : patterns) p.push_back(count_dihom(f, graphs[i]));
    return p;
  });
  SweepResult r;
  r.name = "a3-distinguish";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      ++r.checked;
      if (profiles[i] == profiles[j]) {
        r.fail(show(graphs[i]) + " vs " + show(graphs[j]) + ": no A_3 pattern on <= 4 vertices separates them");
      }
    }
  }
  return r;
}

SweepResult sweep_tree_dp(const SweepOptions& opt) {
  const ColoredGraphFamily trees = enum_colored_trees(6, 2);
  const ColoredGraphFamily graphs = enum_colored_graphs(4, 2);
  return run_tasks("tree-dp", trees.size(), opt, [&](std::size_t i) {
    SweepResult r;
    for (const ColoredGraph& g : graphs) {
      ++r.checked;
      const Count dp = count_hom_cgraph(trees[i], g);
      const Count brute = count_hom_cgraph_brute(trees[i], g);
      if (dp != brute) {
        r.fail(show(trees[i]) + " into " + show(g) + ": " + dp.get_str() + " vs " + brute.get_str());
      }
    }
    return r;
  });
}

SweepResult sweep_incidence_bridge(const SweepOptions& opt) {
  // Connected sources whose incidence graphs have at most 6 nodes.
  Family sources;
  for (int n = 1; n <= 5; ++n) {
    const Family part = enum_hypergraphs(n, 6 - n, n, false, true);
    for (const auto& f : part) {
      if (f.num_vertices() == n && f.weight() <= 6) sources.members.push_back(f);
    }
  }
  const Family targets = filter_weight(enum_hypergraphs(4, 3, 4, false, false), 4);
  return run_tasks("incidence-bridge", sources.size(), opt, [&](std::size_t i) {
    SweepResult r;
    const ColoredGraph inc_f = incidence_graph(sources[i]);
    for (const Hypergraph& g : targets) {
      ++r.checked;
      const Count direct = count(CountKind::inhom(), sources[i], g);
      const Count bridged = count_hom_cgraph(inc_f, incidence_graph(g));
      if (direct != bridged) {
        r.fail(show(sources[i]) + " into " + show(g) + ": " + direct.get_str() + " vs " + bridged.get_str());
      }
    }
    return r;
  });
}

const std::vector<Sweep>& desk_suite() {
  static const std::vector<Sweep> suite = {
      {"refinement-example", "round-1 colors of the two-edge example", sweep_refinement_example},
      {"incidence-refinement", "hypergraph refinement vs refinement of incidence graphs",
       sweep_incidence_refinement},
      {"decomposition-inhom", "InHom = LoMeHom Aut^-1 LoInjInHom", sweep_decomposition_inhom},
      {"decomposition-hom", "Hom = LoMeHom Aut^-1 LoInjHom", sweep_decomposition_hom},
      {"decomposition-loinj", "LoInjInHom = LeafAddInHom Aut^-1 LoInjHom", sweep_decomposition_loinj},
      {"triangularity", "LoMeHom lower, LeafAddInHom upper, diagonals Aut", sweep_triangularity},
      {"edge-size-recovery", "edge-size histogram from InHom(B_k, G)", sweep_edge_size_recovery},
      {"ba-hom-witness", "refinement vs Hom from Berge-acyclic patterns", sweep_ba_hom_witness},
      {"ba-inhom-witness", "refinement vs InHom from Berge-acyclic patterns", sweep_ba_inhom_witness},
      {"simple-ba-hom-witness", "simple inputs vs Hom from simple Berge-acyclic patterns",
       sweep_simple_ba_hom_witness},
      {"simple-ba-inhom-witness", "simple inputs vs InHom from simple Berge-acyclic patterns",
       sweep_simple_ba_inhom_witness},
      {"b-rs-formula", "InHom(B_{r,s}, G) degree-sequence expansion", sweep_b_rs_formula},
      {"choose-s", "least interpolation exponent", sweep_choose_s},
      {"degree-nodes", "distinct interpolation nodes", sweep_degree_nodes},
      {"degree-interpolation", "Vandermonde recovery of degree-split counts", sweep_degree_interpolation},
      {"leafadd-slice", "LoInjInHom on BA^m_n slices", sweep_leafadd_slice},
      {"tensor-multiplicativity", "Hom(F, G x H) = Hom(F, G) Hom(F, H)", sweep_tensor_multiplicativity},
      {"a3-characterization", "Hom into T_n vs longest paths", sweep_a3_characterization},
      {"a3-distinguish", "A_3 patterns separate digraphs on <= 3 vertices", sweep_a3_distinguish},
      {"tree-dp", "colored tree dynamic program vs enumeration", sweep_tree_dp},
      {"incidence-bridge", "InHom vs colored incidence graph homomorphisms", sweep_incidence_bridge},
  };
  return suite;
}

const Sweep* find_sweep(const std::string& name) {
  for (const auto& s : desk_suite()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace hyperhom
