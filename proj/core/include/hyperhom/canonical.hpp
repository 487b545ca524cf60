#pragma once

#include <string>

#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

// A relabelled copy of the input together with its encoding. Two inputs have
// equal encodings exactly when they are isomorphic.
template <class T>
struct Canonical {
  T form;
  std::string encoding;
};

// Individualization-refinement search; edges are ordered by sorting, so edge
// permutations never need to be enumerated.
Canonical<Hypergraph> canonical_form(const Hypergraph& g);
std::string canonical_encoding(const Hypergraph& g);

// Minimum serialization over all vertex permutations. Exponential; kept as an
// oracle for small inputs. Its bytes differ from canonical_encoding.
std::string canonical_encoding_brute(const Hypergraph& g);

// Brute force over vertex permutations.
Canonical<ColoredGraph> canonical_form(const ColoredGraph& g);
Canonical<Digraph> canonical_form(const Digraph& g);
std::string canonical_encoding(const ColoredGraph& g);
std::string canonical_encoding(const Digraph& g);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);
bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b);
bool is_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace hyperhom
