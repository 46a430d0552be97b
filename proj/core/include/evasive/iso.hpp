#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "evasive/graph.hpp"

namespace evasive {

std::uint64_t factorial(int n);

// Image of g under the relabeling v -> images[v].
Graph relabel(const Graph& g, std::span<const int> images);

// Number of permutations fixing g.  Exhaustive (pruned) search; n <= 10.
std::uint64_t aut_group_size(const Graph& g);

// n! / |Aut(g)|.
std::uint64_t iso_class_size(const Graph& g);

// Lexicographically minimal edge bitset over all relabelings; constant on
// isomorphism classes.  Degree-block branch and bound; n <= 10.
Graph canonical_form(const Graph& g);

// Permutation pi with pi(g) a subgraph of h (same vertex count), if any.
std::optional<std::vector<int>> find_spanning_embedding(const Graph& g, const Graph& h);
bool is_spanning_subgraph_iso(const Graph& g, const Graph& h);

// Permutation pi with pi(g) == h exactly, if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

// Wormald divisor for a connected r-regular graph (r > 0):
// r*n*prod_{p <= r-1} p^beta with beta = sum_{p^a <= r-1} floor((n-2)/p^a);
// plain r*n when r < 3.
std::uint64_t wormald_bound(const Graph& g);

}  // namespace evasive
