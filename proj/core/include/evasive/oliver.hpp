#pragma once

#include "evasive/gf.hpp"
#include "evasive/group.hpp"

namespace evasive {

// A group together with the data certifying it is an Oliver group: a normal
// p-subgroup (given by generators) whose quotient is cyclic.
struct OliverWitness {
    GeneratedGroup group;
    std::vector<Permutation> normal_gens;
    int prime = 0;
};

// Checks the witness: the normal generators close inside the group to a
// p-subgroup, conjugation by the group generators preserves it, and the coset
// multiplication table is cyclic.
bool verify_oliver_witness(const OliverWitness& w, std::size_t cap = kDefaultClosureCap);

// All maps x -> a*x + b on GF(p^r) (a != 0), acting on p^r points; the
// translations form the normal p-subgroup.
OliverWitness affine_group(int p, int r);

// affine_group(p, r) times a t-cycle on t extra points.  Requires
// gcd(p^r - 1, t) = 1 so the quotient stays cyclic.
OliverWitness affine_cyclic_product(int p, int r, int t);

// <(0 p)(1 p+1)...(p-1 2p-1) as separate transpositions, (0...p-1)(p...2p-1)>
// on 2p points; the transpositions generate the normal 2-subgroup.
OliverWitness matching_oliver_group(int p);

// <(0 p)(1 p+1)...,(0 1 ... p-1),(p ... 2p-1)> on 2p points; the two p-cycles
// generate the normal p-subgroup.
OliverWitness double_pcycle_group(int p);

// The two specific groups of the ten-vertex analysis, with primed vertices
// i' mapped to i+5.
OliverWitness type1_group();   // <(0 5), (1 2 3 4 6 7 8 9)>, a 2-group
OliverWitness type37_group();  // double_pcycle_group(5)

}  // namespace evasive
