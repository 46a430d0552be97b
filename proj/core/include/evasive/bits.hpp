#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace evasive {

constexpr int kMaxVertices = 16;
constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;  // 120

// Colex index of the unordered pair {i, j} with i < j.  This is the graph6
// bit order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
constexpr int pair_index(int i, int j) {
    return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

struct VertexPair {
    int i, j;  // i < j
};

// Inverse of pair_index.
constexpr VertexPair pair_of_index(int idx) {
    int j = 1;
    while ((j + 1) * j / 2 <= idx) ++j;
    return {idx - j * (j - 1) / 2, j};
}

// Bitset over the kMaxPairs possible edges of a graph on <= 16 vertices.
struct EdgeBits {
    std::uint64_t lo = 0, hi = 0;

    constexpr bool test(int b) const {
        return b < 64 ? (lo >> b) & 1 : (hi >> (b - 64)) & 1;
    }
    constexpr void set(int b) {
        if (b < 64) lo |= std::uint64_t{1} << b;
        else hi |= std::uint64_t{1} << (b - 64);
    }
    constexpr void reset(int b) {
        if (b < 64) lo &= ~(std::uint64_t{1} << b);
        else hi &= ~(std::uint64_t{1} << (b - 64));
    }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    constexpr bool any() const { return lo != 0 || hi != 0; }
    constexpr bool none() const { return lo == 0 && hi == 0; }

    friend constexpr EdgeBits operator&(EdgeBits a, EdgeBits b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend constexpr EdgeBits operator|(EdgeBits a, EdgeBits b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend constexpr EdgeBits operator^(EdgeBits a, EdgeBits b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    constexpr EdgeBits and_not(EdgeBits o) const { return {lo & ~o.lo, hi & ~o.hi}; }
    constexpr bool is_subset_of(EdgeBits o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

    friend constexpr bool operator==(EdgeBits a, EdgeBits b) { return a.lo == b.lo && a.hi == b.hi; }

    // Lexicographic order on the bit sequence b_0 b_1 b_2 ...; the bitset
    // whose first differing bit is 0 compares smaller.
    friend bool lex_less(EdgeBits a, EdgeBits b) {
        if (std::uint64_t d = a.lo ^ b.lo) return !((a.lo >> std::countr_zero(d)) & 1);
        if (std::uint64_t d = a.hi ^ b.hi) return !((a.hi >> std::countr_zero(d)) & 1);
        return false;
    }

    // Total order usable as a map key (word order; not lex_less).
    friend constexpr bool operator<(EdgeBits a, EdgeBits b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }

    template <class Fn>
    void for_each_bit(Fn&& fn) const {
        for (std::uint64_t w = lo; w;) {
            int b = std::countr_zero(w);
            fn(b);
            w &= w - 1;
        }
        for (std::uint64_t w = hi; w;) {
            int b = std::countr_zero(w);
            fn(64 + b);
            w &= w - 1;
        }
    }
};

struct EdgeBitsHash {
    std::size_t operator()(const EdgeBits& e) const {
        std::uint64_t x = e.lo * 0x9e3779b97f4a7c15ull;
        x ^= e.hi + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x);
    }
};

// All valid pair bits for a graph on n vertices.
inline EdgeBits full_edge_mask(int n) {
    EdgeBits m;
    int total = n * (n - 1) / 2;
    if (total >= 64) {
        m.lo = ~std::uint64_t{0};
        if (total > 64) m.hi = (std::uint64_t{1} << (total - 64)) - 1;
    } else {
        m.lo = (std::uint64_t{1} << total) - 1;
    }
    return m;
}

}  // namespace evasive
