#include "hyperhom/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace hyperhom {

using nlohmann::json;

namespace {

int read_count(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
  auto n = j["n"].get<long long>();
  if (n < 0) throw ParseError("\"n\" must be non-negative");
  if (n > 1'000'000) throw ParseError("\"n\" is too large");
  return static_cast<int>(n);
}

const json& read_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing array field \"") + key + "\"");
  }
  return j[key];
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(const json& arr, const char* what) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw ParseError(std::string(what) + " entries must be [u,v] integer pairs");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

template <class F>
auto wrap_invariants(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const InvalidStructure& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) throw ParseError("missing string field \"type\"");
  const auto type = j["type"].get<std::string>();
  const int n = read_count(j);
  if (type == "hypergraph") {
    std::vector<Edge> edges;
    for (const auto& e : read_array(j, "edges")) {
      if (!e.is_array()) throw ParseError("hyperedges must be arrays");
      Edge edge;
      for (const auto& v : e) {
        if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
        edge.push_back(v.get<int>());
      }
      edges.push_back(std::move(edge));
    }
    return wrap_invariants([&] { return Instance(Hypergraph(n, std::move(edges))); });
  }
  if (type == "cgraph") {
    std::vector<int> colors;
    for (const auto& c : read_array(j, "colors")) {
      if (!c.is_number_integer()) throw ParseError("colors must be integers");
      colors.push_back(c.get<int>());
    }
    auto edges = read_pairs(read_array(j, "edges"), "edges");
    return wrap_invariants([&] { return Instance(ColoredGraph(n, std::move(colors), edges)); });
  }
  if (type == "digraph") {
    auto arcs = read_pairs(read_array(j, "arcs"), "arcs");
    return wrap_invariants([&] { return Instance(Digraph(n, arcs)); });
  }
  throw ParseError("unknown instance type \"" + type + "\"");
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(j);
}

std::vector<Instance> read_instances(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<Instance> out;
  json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (const auto& item : whole) out.push_back(parse_instance(item));
    } else {
      out.push_back(parse_instance(whole));
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_instance(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Instance> read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return read_instances(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const Hypergraph& g) {
  return json{{"type", "hypergraph"}, {"n", g.num_vertices()}, {"edges", g.edges()}};
}

json to_json(const ColoredGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
  return json{{"type", "cgraph"}, {"n", g.num_vertices()}, {"colors", g.colors()}, {"edges", edges}};
}

json to_json(const Digraph& g) {
  json arcs = json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  return json{{"type", "digraph"}, {"n", g.num_vertices()}, {"arcs", arcs}};
}

json to_json(const Instance& inst) {
  return std::visit([](const auto& g) { return to_json(g); }, inst);
}

json count_to_json(const mpz_class& value) {
  if (value.fits_slong_p()) return json(value.get_si());
  return json(value.get_str());
}

const char* type_name(const Instance& inst) {
  switch (inst.index()) {
    case 0: return "hypergraph";
    case 1: return "cgraph";
    default: return "digraph";
  }
}

}  // namespace hyperhom
