#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evasive/graph.hpp"

namespace evasive {

// Permutation of {0, ..., degree-1}, stored as the image array.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int degree);                       // identity
    explicit Permutation(std::vector<std::uint8_t> images);  // validated

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    bool is_identity() const;

    // (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    int order() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    const std::vector<std::uint8_t>& images() const { return img_; }

    // Cycle notation, e.g. "(0 5)(1 6)"; the identity prints as "()".
    std::string to_cycles() const;
    static Permutation from_cycles(const std::string& text, int degree);

  private:
    std::vector<std::uint8_t> img_;
};

// Apply a permutation of vertices to a graph.
Graph apply(const Permutation& p, const Graph& g);

// Induced action on unordered pairs: a permutation of the n(n-1)/2 colex
// pair indices.
Permutation pair_action(const Permutation& p);

}  // namespace evasive
