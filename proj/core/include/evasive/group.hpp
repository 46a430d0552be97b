#pragma once

#include <cstdint>
#include <vector>

#include "evasive/graph.hpp"
#include "evasive/perm.hpp"

namespace evasive {

constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Permutation group given by generators, with its element set materialized.
struct GeneratedGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted; contains the identity

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
};

// Breadth-first closure of the generators.  Throws CapError when the element
// count would exceed cap.
GeneratedGroup group_closure(const std::vector<Permutation>& gens,
                             std::size_t cap = kDefaultClosureCap);

// Orbits of the group on points {0, ..., degree-1}, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> point_orbits(const GeneratedGroup& g);

// Orbits of the group on unordered vertex pairs, returned as graphs on n
// vertices, ordered by their smallest pair index.  Together they partition
// the full pair set.
std::vector<Graph> edge_orbits(const GeneratedGroup& g, int n);

}  // namespace evasive
