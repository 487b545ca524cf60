#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperhom {

struct SweepOptions {
  int workers = 1;
  std::uint64_t seed = 20240601;
  // Overrides the per-pair default weight budget of the witness sweeps.
  std::optional<int> budget;
};

struct SweepResult {
  std::string name;
  long checked = 0;
  long violations = 0;
  long budget_exhausted = 0;
  // Description of the first violation, in instance order.
  std::string first_failure;

  bool ok() const { return violations == 0 && budget_exhausted == 0; }
  void fail(std::string what);
  void merge(const SweepResult& other);
  nlohmann::json to_json() const;
};

// Exhaustive checks at fixed bounds. Every sweep is deterministic for a given
// seed, whatever the worker count.
struct Sweep {
  std::string name;
  std::string description;
  std::function<SweepResult(const SweepOptions&)> run;
};

// The full desk-scale suite in a fixed order.
const std::vector<Sweep>& desk_suite();

// nullptr when no sweep has that name.
const Sweep* find_sweep(const std::string& name);

SweepResult sweep_refinement_example(const SweepOptions& opt);
SweepResult sweep_incidence_refinement(const SweepOptions& opt);
SweepResult sweep_decomposition_inhom(const SweepOptions& opt);
SweepResult sweep_decomposition_hom(const SweepOptions& opt);
SweepResult sweep_decomposition_loinj(const SweepOptions& opt);
SweepResult sweep_triangularity(const SweepOptions& opt);
SweepResult sweep_edge_size_recovery(const SweepOptions& opt);
SweepResult sweep_ba_hom_witness(const SweepOptions& opt);
SweepResult sweep_ba_inhom_witness(const SweepOptions& opt);
SweepResult sweep_simple_ba_hom_witness(const SweepOptions& opt);
SweepResult sweep_simple_ba_inhom_witness(const SweepOptions& opt);
SweepResult sweep_b_rs_formula(const SweepOptions& opt);
SweepResult sweep_choose_s(const SweepOptions& opt);
SweepResult sweep_degree_nodes(const SweepOptions& opt);
SweepResult sweep_degree_interpolation(const SweepOptions& opt);
SweepResult sweep_leafadd_slice(const SweepOptions& opt);
SweepResult sweep_tensor_multiplicativity(const SweepOptions& opt);
SweepResult sweep_a3_characterization(const SweepOptions& opt);
SweepResult sweep_a3_distinguish(const SweepOptions& opt);
SweepResult sweep_tree_dp(const SweepOptions& opt);
SweepResult sweep_incidence_bridge(const SweepOptions& opt);

}  // namespace hyperhom
