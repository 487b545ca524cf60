#pragma once

#include <hyperhom/constructions.hpp>
#include <hyperhom/hypergraph.hpp>

namespace fixtures {

// Two edges {1,2} and {1,2,3}; the running example of the refinement table.
inline hyperhom::Hypergraph nested() { return {3, {{1, 2}, {1, 2, 3}}}; }
inline hyperhom::Hypergraph path3() { return {3, {{1, 2}, {2, 3}}}; }
inline hyperhom::Hypergraph k1() { return {1, {}}; }
inline hyperhom::Hypergraph b(int k) { return hyperhom::single_edge(k); }

}  // namespace fixtures
