#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "hyperhom/canonical.hpp"
#include "hyperhom/digraphs.hpp"
#include "hyperhom/enumerate.hpp"
#include "hyperhom/homcount.hpp"
#include "hyperhom/io.hpp"
#include "hyperhom/refine.hpp"
#include "hyperhom/sweeps.hpp"
#include "hyperhom/verify.hpp"

namespace hyperhom::cli {

namespace {

using nlohmann::json;

// Reported with exit code 2 and a "bound violation" prefix.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSubcommands = {"cr", "hom", "enumerate", "verify", "dag", "fmt"};

Instance load_one(const std::string& path) {
  auto all = read_instance_file(path);
  if (all.size() != 1) {
    throw ParseError(path + ": expected exactly one instance, found " + std::to_string(all.size()));
  }
  return std::move(all.front());
}

template <class T>
const T& expect(const Instance& inst, const std::string& path) {
  if (const T* p = std::get_if<T>(&inst)) return *p;
  throw UsageError(path + ": unexpected instance type " + type_name(inst));
}

void non_negative(int value, const char* flag) {
  if (value < 0) throw BoundError(std::string(flag) + " must be non-negative");
}

std::string count_text(const Count& c) { return c.get_str(); }

struct Options {
  std::string out_path;
  // cr / hom
  std::vector<std::string> inputs;
  std::string kind = "hom";
  std::string own_color = "on";
  std::optional<int> rounds;
  // enumerate
  std::string family;
  int max_weight = 5;
  int m = 1;
  int n = 3;
  int max_v = 3;
  int max_e = 2;
  int max_edge_size = 3;
  int colors = 2;
  bool simple = false;
  bool connected = false;
  // verify
  std::string suite;
  std::string check;
  bool list = false;
  int workers = 1;
  std::uint64_t seed = SweepOptions{}.seed;
  std::optional<int> budget;
  // dag
  int tournament_size = 3;
  int max_pattern_v = 4;
};

int run_cr(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw UsageError("cr takes exactly two instance files");
  if (o.rounds) non_negative(*o.rounds, "--rounds");
  const Instance a = load_one(o.inputs[0]);
  const Instance b = load_one(o.inputs[1]);
  if (a.index() != b.index()) throw UsageError("cr needs two instances of the same type");
  Verdict v;
  if (std::holds_alternative<Hypergraph>(a)) {
    v = distinguishes_hypergraphs(std::get<Hypergraph>(a), std::get<Hypergraph>(b), o.rounds);
  } else if (std::holds_alternative<ColoredGraph>(a)) {
    v = distinguishes_cgraphs(std::get<ColoredGraph>(a), std::get<ColoredGraph>(b), o.own_color == "on",
                              o.rounds);
  } else {
    throw UsageError("cr accepts hypergraph or cgraph instances");
  }
  if (v.distinguished) {
    out << "distinguished at round " << *v.round << "\n";
  } else {
    out << "not distinguished\n";
  }
  return kOk;
}

int run_hom(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw UsageError("hom takes a pattern file and a target file");
  const auto kind = kind_from_name(o.kind);
  if (!kind) throw UsageError("unknown --kind " + o.kind);
  const Instance f = load_one(o.inputs[0]);
  const Instance g = load_one(o.inputs[1]);
  if (f.index() != g.index()) throw UsageError("hom needs two instances of the same type");
  if (std::holds_alternative<Hypergraph>(f)) {
    out << count_text(count(*kind, std::get<Hypergraph>(f), std::get<Hypergraph>(g))) << "\n";
    return kOk;
  }
  if (o.kind != "hom") throw UsageError("--kind " + o.kind + " applies to hypergraphs only");
  if (const auto* t = std::get_if<ColoredGraph>(&f)) {
    const auto& target = std::get<ColoredGraph>(g);
    out << count_text(is_connected(*t) ? count_hom_cgraph(*t, target) : count_hom_cgraph_brute(*t, target))
        << "\n";
    return kOk;
  }
  out << count_text(count_dihom(std::get<Digraph>(f), std::get<Digraph>(g))) << "\n";
  return kOk;
}

template <class Fam>
void emit_family(const Fam& family, std::ostream& out) {
  for (const auto& member : family) out << to_json(member).dump() << "\n";
}

int run_enumerate(const Options& o, std::ostream& out) {
  for (auto [value, flag] : {std::pair{o.max_weight, "--max-weight"}, std::pair{o.m, "--m"},
                             std::pair{o.max_v, "--max-v"}, std::pair{o.max_e, "--max-e"},
                             std::pair{o.max_edge_size, "--max-edge-size"}}) {
    non_negative(value, flag);
  }
  try {
    if (o.family == "ba") {
      emit_family(enum_ba(o.max_weight), out);
    } else if (o.family == "ba-m-n") {
      emit_family(enum_ba_m_n(o.m, o.n), out);
    } else if (o.family == "hypergraphs") {
      emit_family(enum_hypergraphs(o.max_v, o.max_e, o.max_edge_size, o.simple, o.connected), out);
    } else if (o.family == "connected") {
      emit_family(enum_connected(o.m, o.max_edge_size, o.max_v), out);
    } else if (o.family == "digraphs") {
      emit_family(enum_digraphs(o.max_v), out);
    } else if (o.family == "dags-a3") {
      emit_family(enum_dags_A3(o.max_v), out);
    } else if (o.family == "colored-trees") {
      emit_family(enum_colored_trees(o.max_v, o.colors), out);
    } else if (o.family == "colored-graphs") {
      emit_family(enum_colored_graphs(o.max_v, o.colors), out);
    } else {
      throw UsageError("unknown family " + o.family);
    }
  } catch (const InvalidStructure& e) {
    throw BoundError(e.what());
  }
  return kOk;
}

json witness_json(const std::string& name, const Hypergraph& g, const Hypergraph& h, const WitnessReport& r) {
  json j{{"check", name},
         {"instances", {to_json(g), to_json(h)}},
         {"ok", r.consistent && !r.budget_exhausted},
         {"distinguished", r.refinement.distinguished},
         {"isomorphic", r.isomorphic},
         {"budget", r.budget},
         {"patterns_checked", r.patterns_checked}};
  if (r.refinement.round) j["round"] = *r.refinement.round;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["counts"] = {count_to_json(r.count_g), count_to_json(r.count_h)};
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json pair_check(const std::string& name, const Hypergraph& g, const Hypergraph& h, std::optional<int> budget) {
  if (name.rfind("decomposition-", 0) == 0) {
    CheckResult res;
    if (name == "decomposition-inhom") {
      res = check_decomposition_inhom(g, h);
    } else if (name == "decomposition-hom") {
      res = check_decomposition_hom(g, h);
    } else if (name == "decomposition-loinj") {
      res = check_decomposition_loinj(g, h);
    } else {
      throw UsageError("unknown check " + name);
    }
    json j{{"check", name}, {"instances", {to_json(g), to_json(h)}}, {"ok", res.ok}};
    if (!res.detail.empty()) j["detail"] = res.detail;
    return j;
  }
  if (name == "ba-hom-witness") return witness_json(name, g, h, check_ba_hom_witness(g, h, budget));
  if (name == "ba-inhom-witness") return witness_json(name, g, h, check_ba_inhom_witness(g, h, budget));
  if (name == "simple-ba-hom-witness") {
    return witness_json(name, g, h, check_simple_ba_witness(g, h, CountKind::hom(), budget));
  }
  if (name == "simple-ba-inhom-witness") {
    return witness_json(name, g, h, check_simple_ba_witness(g, h, CountKind::inhom(), budget));
  }
  throw UsageError("check " + name + " does not take instance files");
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.list) {
    for (const auto& s : desk_suite()) out << s.name << "\t" << s.description << "\n";
    return kOk;
  }
  if (o.workers < 1) throw BoundError("--workers must be at least 1");
  if (o.budget) non_negative(*o.budget, "--budget");
  if (o.suite.empty() == o.check.empty()) throw UsageError("verify needs exactly one of --suite or --check");
  if (!o.suite.empty() && o.suite != "desk") throw UsageError("unknown suite " + o.suite);

  if (!o.check.empty() && !o.inputs.empty()) {
    if (o.inputs.size() != 2) throw UsageError("pair checks take exactly two instance files");
    const Instance first = load_one(o.inputs[0]);
    const Instance second = load_one(o.inputs[1]);
    const auto& g = expect<Hypergraph>(first, o.inputs[0]);
    const auto& h = expect<Hypergraph>(second, o.inputs[1]);
    try {
      const json j = pair_check(o.check, g, h, o.budget);
      out << j.dump() << "\n";
      return j["ok"].get<bool>() ? kOk : kCheckFailed;
    } catch (const InvalidStructure& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<const Sweep*> selected;
  if (!o.suite.empty()) {
    for (const auto& s : desk_suite()) selected.push_back(&s);
  } else {
    const Sweep* s = find_sweep(o.check);
    if (!s) throw UsageError("unknown check " + o.check);
    selected.push_back(s);
  }
  SweepOptions opt;
  opt.workers = o.workers;
  opt.seed = o.seed;
  opt.budget = o.budget;
  int passed = 0;
  for (const Sweep* s : selected) {
    SweepResult r = s->run(opt);
    r.name = s->name;
    out << r.to_json().dump() << "\n";
    out.flush();
    if (r.ok()) ++passed;
    err << (r.ok() ? "ok   " : "FAIL ") << s->name << " (" << r.checked << " checked)\n";
  }
  err << passed << "/" << selected.size() << " checks passed\n";
  return passed == static_cast<int>(selected.size()) ? kOk : kCheckFailed;
}

int run_dag(const std::string& action, const Options& o, std::ostream& out) {
  if (action == "tournament") {
    non_negative(o.tournament_size, "size");
    out << to_json(transitive_tournament(o.tournament_size)).dump() << "\n";
    return kOk;
  }
  if (o.inputs.size() != 2) throw UsageError("dag " + action + " takes exactly two digraph files");
  const Instance first = load_one(o.inputs[0]);
  const Instance second = load_one(o.inputs[1]);
  const auto& a = expect<Digraph>(first, o.inputs[0]);
  const auto& b = expect<Digraph>(second, o.inputs[1]);
  if (action == "tensor") {
    out << to_json(tensor_product(a, b)).dump() << "\n";
    return kOk;
  }
  if (action == "hom") {
    out << count_text(count_dihom(a, b)) << "\n";
    return kOk;
  }
  // a3-distinguish
  if (o.max_pattern_v < 0 || o.max_pattern_v > 4) throw BoundError("--max-pattern-v must be in 0..4");
  const DagReport r = distinguish_by_A3(a, b, o.max_pattern_v);
  json j{{"isomorphic", r.isomorphic},
         {"patterns_checked", r.patterns_checked},
         {"budget_exhausted", r.budget_exhausted},
         {"consistent", r.consistent}};
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["counts"] = {count_to_json(r.count_g), count_to_json(r.count_h)};
  }
  out << j.dump() << "\n";
  return r.consistent ? kOk : kCheckFailed;
}

int run_fmt(const Options& o, std::ostream& out) {
  if (o.inputs.empty()) throw UsageError("fmt takes at least one instance file");
  for (const auto& path : o.inputs) {
    for (const auto& inst : read_instance_file(path)) out << to_json(inst).dump() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
      std::find(kSubcommands.begin(), kSubcommands.end(), args[0]) == kSubcommands.end()) {
    err << "unknown subcommand '" << args[0] << "'; expected one of cr, hom, enumerate, verify, dag, fmt\n";
    return kUsage;
  }

  Options o;
  CLI::App app{"Hypergraph color refinement, homomorphism counts and exact checks", "hyperhom"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write data output to PATH instead of stdout");

  auto* cr = app.add_subcommand("cr", "Refine two instances and report the first unbalanced round");
  cr->add_option("inputs", o.inputs, "Two instance files")->required()->expected(2);
  cr->add_option("--own-color", o.own_color, "Keep each vertex's own color (cgraph only)")
      ->check(CLI::IsMember({"on", "off"}));
  cr->add_option("--rounds", o.rounds, "Round cap");

  auto* hom = app.add_subcommand("hom", "Count mapping pairs from a pattern into a target");
  hom->add_option("inputs", o.inputs, "Pattern and target files")->required()->expected(2);
  hom->add_option("--kind", o.kind, "Species")->check(CLI::IsMember(kind_names()));

  auto* en = app.add_subcommand("enumerate", "Emit a family of canonical representatives as JSON-lines");
  en->add_option("family", o.family,
                 "ba | ba-m-n | hypergraphs | connected | digraphs | dags-a3 | colored-trees | colored-graphs")
      ->required();
  en->add_option("--max-weight", o.max_weight, "Largest |V|+|E| (ba)");
  en->add_option("--m", o.m, "Number of edges (ba-m-n, connected)");
  en->add_option("--n", o.n, "Largest edge size (ba-m-n)");
  en->add_option("--max-v", o.max_v, "Largest vertex count");
  en->add_option("--max-e", o.max_e, "Largest edge count (hypergraphs)");
  en->add_option("--max-edge-size", o.max_edge_size, "Largest edge size");
  en->add_option("--colors", o.colors, "Number of vertex colors (colored families)");
  en->add_flag("--simple", o.simple, "Simple hypergraphs only");
  en->add_flag("--connected", o.connected, "Connected hypergraphs only");

  auto* ver = app.add_subcommand("verify", "Run exact checks and print a JSON-lines report");
  ver->add_option("--suite", o.suite, "Run a whole suite (desk)");
  ver->add_option("--check", o.check, "Run one named check");
  ver->add_flag("--list", o.list, "List check names");
  ver->add_option("inputs", o.inputs, "G and H instance files for pair checks");
  ver->add_option("--workers", o.workers, "Worker threads");
  ver->add_option("--seed", o.seed, "Seed for randomized checks");
  ver->add_option("--budget", o.budget, "Weight budget for witness searches");

  auto* dag = app.add_subcommand("dag", "Directed graph tools");
  dag->require_subcommand(1);
  auto* tensor = dag->add_subcommand("tensor", "Tensor product of two digraphs");
  tensor->add_option("inputs", o.inputs, "Two digraph files")->required()->expected(2);
  auto* tour = dag->add_subcommand("tournament", "Transitive tournament on N vertices");
  tour->add_option("size", o.tournament_size, "N")->required();
  auto* dhom = dag->add_subcommand("hom", "Count arc-preserving maps");
  dhom->add_option("inputs", o.inputs, "Pattern and target digraph files")->required()->expected(2);
  auto* a3 = dag->add_subcommand("a3-distinguish", "Search A_3 patterns separating two digraphs");
  a3->add_option("inputs", o.inputs, "Two digraph files")->required()->expected(2);
  a3->add_option("--max-pattern-v", o.max_pattern_v, "Largest pattern vertex count");

  auto* fmt = app.add_subcommand("fmt", "Validate instance files and print them normalized");
  fmt->add_option("inputs", o.inputs, "Instance files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  std::ostream* data = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "usage error: cannot write " << o.out_path << "\n";
      return kUsage;
    }
    data = &file;
  }

  try {
    if (cr->parsed()) return run_cr(o, *data);
    if (hom->parsed()) return run_hom(o, *data);
    if (en->parsed()) return run_enumerate(o, *data);
    if (ver->parsed()) return run_verify(o, *data, err);
    if (fmt->parsed()) return run_fmt(o, *data);
    for (auto* sub : {tensor, tour, dhom, a3}) {
      if (sub->parsed()) return run_dag(sub->get_name(), o, *data);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundError& e) {
    err << "bound violation: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidStructure& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace hyperhom::cli
