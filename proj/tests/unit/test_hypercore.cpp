#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <hyperhom/canonical.hpp>
#include <hyperhom/constructions.hpp>
#include <hyperhom/io.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace hyperhom;

namespace {

std::set<std::pair<int, int>> edge_set(const ColoredGraph& g) {
  std::set<std::pair<int, int>> out;
  for (auto [u, v] : g.edge_list()) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

}  // namespace

TEST_CASE("hypergraph invariants are enforced") {
  CHECK_THROWS_AS(Hypergraph(2, {{}}), InvalidStructure);
  CHECK_THROWS_AS(Hypergraph(2, {{1, 3}}), InvalidStructure);
  CHECK_THROWS_AS(Hypergraph(2, {{1, 1}}), InvalidStructure);
  CHECK_THROWS_AS(Hypergraph(-1, {}), InvalidStructure);
  CHECK(Hypergraph(2, {{2, 1}}).edge(0) == Edge{1, 2});
  CHECK_THROWS_AS(ColoredGraph(2, {1}, {}), InvalidStructure);
  CHECK_THROWS_AS(ColoredGraph(2, {1, 1}, {{1, 1}}), InvalidStructure);
}

TEST_CASE("incidence graph") {
  auto g = incidence_graph(fixtures::nested());
  CHECK(g.num_vertices() == 5);
  CHECK(g.colors() == std::vector<int>{1, 1, 1, 2, 2});
  CHECK(edge_set(g) == std::set<std::pair<int, int>>{{1, 4}, {2, 4}, {1, 5}, {2, 5}, {3, 5}});

  auto k1 = incidence_graph(fixtures::k1());
  CHECK(k1.num_vertices() == 1);
  CHECK(k1.num_edges() == 0);

  auto loops = incidence_graph(Hypergraph(1, {{1}, {1}}));
  CHECK(loops.colors() == std::vector<int>{1, 2, 2});
  CHECK(edge_set(loops) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});
}

TEST_CASE("connectivity and Berge acyclicity") {
  CHECK(is_connected(fixtures::nested()));
  CHECK_FALSE(is_berge_acyclic(fixtures::nested()));
  CHECK(is_connected(fixtures::k1()));
  CHECK(is_berge_acyclic(fixtures::k1()));
  CHECK_FALSE(is_connected(Hypergraph(2, {{1}, {2}})));
  CHECK(is_berge_acyclic(fixtures::path3()));
  CHECK(is_berge_acyclic(Hypergraph(1, {{1}, {1}})));
  CHECK_FALSE(is_berge_acyclic(Hypergraph(2, {{1, 2}, {1, 2}})));
}

TEST_CASE("quotient") {
  CHECK(quotient(fixtures::path3(), {{1, 2, 3}}) == Hypergraph(1, {{1}, {1}}));
  CHECK(quotient(fixtures::nested(), identity_partition(3)) == fixtures::nested());
  CHECK(quotient(fixtures::b(2), {{1, 2}}) == Hypergraph(1, {{1}}));
  CHECK_THROWS_AS(quotient(fixtures::path3(), {{1, 2}}), InvalidStructure);
  CHECK_THROWS_AS(quotient(fixtures::path3(), {{1, 2}, {2, 3}}), InvalidStructure);
  CHECK_THROWS_AS(quotient(fixtures::path3(), {{1, 2, 3}, {}}), InvalidStructure);
}

TEST_CASE("merge relation") {
  std::vector<Vertex> constant{1, 1, 1};
  CHECK(normalize_partition(merge_relation(fixtures::path3(), constant)) == Partition{{1, 2, 3}});
  std::vector<Vertex> injective{3, 1, 2};
  CHECK(normalize_partition(merge_relation(fixtures::path3(), injective)) == identity_partition(3));
  Hypergraph split(3, {{1, 2}, {3}});
  CHECK(normalize_partition(merge_relation(split, constant)) == Partition{{1, 2}, {3}});
}

TEST_CASE("merge relation agrees with the walk closure") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Edge> edges;
    int m = static_cast<int>(rng() % 4);
    for (int j = 0; j < m; ++j) {
      Edge e;
      for (int v = 1; v <= n; ++v)
        if (rng() % 2) e.push_back(v);
      if (e.empty()) e.push_back(1);
      edges.push_back(e);
    }
    Hypergraph f(n, edges);
    std::vector<Vertex> hv(n);
    for (auto& x : hv) x = 1 + static_cast<int>(rng() % 3);
    auto labels = oracle::merge_labels(f, hv);
    auto classes = merge_relation(f, hv);
    std::vector<int> cls(n);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Vertex v : classes[c]) cls[v - 1] = static_cast<int>(c);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK((cls[u] == cls[v]) == (labels[u] == labels[v]));
  }
}

TEST_CASE("fill edges") {
  std::vector<int> one{1};
  CHECK(is_isomorphic(fill_edges(fixtures::b(2), one), fixtures::b(3)));
  std::vector<int> zeros{0, 0};
  CHECK(fill_edges(fixtures::nested(), zeros) == fixtures::nested());
  std::vector<int> two_one{2, 1};
  auto filled = fill_edges(Hypergraph(1, {{1}, {1}}), two_one);
  CHECK(is_isomorphic(filled, Hypergraph(4, {{1, 2, 3}, {1, 4}})));
  CHECK_THROWS_AS(fill_edges(fixtures::nested(), one), InvalidStructure);
}

TEST_CASE("single edge") {
  CHECK(single_edge(1) == Hypergraph(1, {{1}}));
  CHECK(single_edge(3) == Hypergraph(3, {{1, 2, 3}}));
  CHECK_THROWS_AS(single_edge(0), InvalidStructure);
  CHECK(oracle::aut(single_edge(1)) == 1);
  CHECK(oracle::aut(single_edge(2)) == 2);
  CHECK(oracle::aut(single_edge(3)) == 6);
}

TEST_CASE("merge parallel edges") {
  CHECK(merge_parallel_edges(Hypergraph(1, {{1}, {1}})) == Hypergraph(1, {{1}}));
  CHECK(merge_parallel_edges(fixtures::nested()) == fixtures::nested());
  CHECK(merge_parallel_edges(Hypergraph(2, {{1, 2}, {1, 2}, {1}})) == Hypergraph(2, {{1, 2}, {1}}));
  CHECK(merge_parallel_edges(Hypergraph(2, {{1, 2}, {1, 2}})).is_simple());
}

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(fixtures::nested(), 1).entries == std::vector<int>{0, 1, 1});
  CHECK(degree_sequence(Hypergraph(2, {{1}}), 2).entries == std::vector<int>{0, 0});
  CHECK(degree_sequence(Hypergraph(1, {{1}, {1}}), 1).entries == std::vector<int>{2});
  CHECK(degree_sequence(fixtures::nested(), 1).total() == 2);
  CHECK_THROWS(degree_sequence(fixtures::nested(), 4));
}

TEST_CASE("B_rs construction") {
  Hypergraph loop(1, {{1}});
  CHECK(build_b_rs(loop, 1, 0, 3) == loop);
  CHECK(build_b_rs(loop, 1, 1, 2) == Hypergraph(3, {{1}, {1, 2, 3}}));
  CHECK(build_b_rs(loop, 1, 2, 1) == Hypergraph(3, {{1}, {1, 2}, {1, 3}}));
  CHECK_THROWS_AS(build_b_rs(loop, 1, 1, 0), InvalidStructure);
  CHECK_THROWS_AS(build_b_rs(loop, 2, 1, 1), InvalidStructure);
}

TEST_CASE("relabel and disjoint union") {
  std::vector<Vertex> swap{2, 1};
  CHECK(relabel(Hypergraph(2, {{1}, {1, 2}}), swap) == Hypergraph(2, {{2}, {1, 2}}));
  auto u = disjoint_union(fixtures::b(2), fixtures::b(1));
  CHECK(u == Hypergraph(3, {{1, 2}, {3}}));
  CHECK_FALSE(is_connected(u));
}

TEST_CASE("parse and print instances") {
  auto inst = parse_instance(std::string(R"({"type":"hypergraph","n":3,"edges":[[1,2],[3,2,1]]})"));
  REQUIRE(std::holds_alternative<Hypergraph>(inst));
  CHECK(std::get<Hypergraph>(inst) == fixtures::nested());
  CHECK(to_json(inst).dump() == R"({"edges":[[1,2],[1,2,3]],"n":3,"type":"hypergraph"})");

  auto cg = parse_instance(std::string(R"({"type":"cgraph","n":2,"colors":[1,2],"edges":[[1,2]]})"));
  CHECK(std::get<ColoredGraph>(cg).adjacent(1, 2));
  auto dg = parse_instance(std::string(R"({"type":"digraph","n":2,"arcs":[[1,2],[2,2]]})"));
  CHECK(std::get<Digraph>(dg).has_loop());
  CHECK(std::string(type_name(dg)) == "digraph");

  for (auto inst2 : {inst, cg, dg}) CHECK(parse_instance(to_json(inst2)) == inst2);
}

TEST_CASE("malformed instances are parse errors") {
  CHECK_THROWS_AS(parse_instance(std::string("{")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(R"({"n":1,"edges":[]})")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(R"({"type":"tree","n":1})")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(R"({"type":"hypergraph","n":2,"edges":[[1,5]]})")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(R"({"type":"hypergraph","n":2,"edges":[[]]})")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(R"({"type":"cgraph","n":2,"colors":[1],"edges":[]})")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(R"({"type":"digraph","n":2,"arcs":[[1]]})")), ParseError);
}

TEST_CASE("JSON-lines and array inputs") {
  std::istringstream lines(
      "{\"type\":\"hypergraph\",\"n\":1,\"edges\":[]}\n\n{\"type\":\"hypergraph\",\"n\":2,\"edges\":[[1,2]]}\n");
  CHECK(read_instances(lines).size() == 2);
  std::istringstream array(R"([{"type":"hypergraph","n":1,"edges":[]},{"type":"digraph","n":1,"arcs":[]}])");
  CHECK(read_instances(array).size() == 2);
  std::istringstream bad("{\"type\":\"hypergraph\",\"n\":1,\"edges\":[]}\n{oops}\n");
  try {
    read_instances(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(read_instance_file("/nonexistent/instance.json"), ParseError);
}

TEST_CASE("count serialization") {
  CHECK(count_to_json(mpz_class(42)).dump() == "42");
  mpz_class big("123456789012345678901234567890");
  auto j = count_to_json(big);
  CHECK(j.dump().find("123456789012345678901234567890") != std::string::npos);
}
