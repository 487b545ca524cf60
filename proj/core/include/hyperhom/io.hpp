#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

// Instance files hold JSON objects tagged by "type":
//   {"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}
//   {"type":"cgraph","n":2,"colors":[1,2],"edges":[[1,2]]}
//   {"type":"digraph","n":2,"arcs":[[1,2]]}
using Instance = std::variant<Hypergraph, ColoredGraph, Digraph>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance parse_instance(const nlohmann::json& j);
Instance parse_instance(const std::string& text);

// Accepts either one JSON document or JSON-lines (blank lines skipped).
std::vector<Instance> read_instances(std::istream& in);
std::vector<Instance> read_instance_file(const std::string& path);

nlohmann::json to_json(const Hypergraph& g);
nlohmann::json to_json(const ColoredGraph& g);
nlohmann::json to_json(const Digraph& g);
nlohmann::json to_json(const Instance& inst);

// Emits a JSON number when the value fits in 64 bits, a decimal string
// otherwise.
nlohmann::json count_to_json(const mpz_class& value);

const char* type_name(const Instance& inst);

}  // namespace hyperhom
