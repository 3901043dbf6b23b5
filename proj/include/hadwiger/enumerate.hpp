#pragma once

#include "hadwiger/graph.hpp"

#include <cstdint>
#include <vector>

namespace hadwiger {

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxCanonicalOrder = 11;

/// Adjacency bit-string of g under the identity labeling, upper triangle in
/// column order (0,1),(0,2),(1,2),(0,3),... with the first pair as the most
/// significant bit. Requires n <= 11.
std::uint64_t adjacency_code(const Graph& g);

/// Minimum adjacency_code over all vertex permutations.
std::uint64_t canonical_code(const Graph& g);

/// The relabeling of g whose adjacency_code equals canonical_code(g).
Graph canonical_form(const Graph& g);

/// Graph on n vertices whose adjacency_code is `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// One representative (in canonical form) per isomorphism class of graphs on
/// n vertices, in ascending canonical_code order. Throws TooLarge for n > 7.
std::vector<Graph> enumerate_graphs(int n);

} // namespace hadwiger
