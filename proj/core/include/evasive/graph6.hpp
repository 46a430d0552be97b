#pragma once

#include <string>

#include "evasive/graph.hpp"

namespace evasive {

// graph6 text format: one size byte n+63 (n <= 62), then the upper-triangle
// bits in colex order packed 6 per byte (first bit highest), each byte +63,
// zero-padded to a multiple of 6 bits.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace evasive
