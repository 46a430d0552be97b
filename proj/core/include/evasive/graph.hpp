#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evasive/bits.hpp"

namespace evasive {

// Undirected simple graph on n labeled vertices (2 <= n <= 16), stored as an
// edge bitset in colex pair order.
struct Graph {
    int n = 0;
    EdgeBits edges;

    Graph() = default;
    explicit Graph(int vertex_count);

    int edge_count() const { return edges.count(); }
    bool has_edge(int i, int j) const { return edges.test(pair_index(i, j)); }
    void add_edge(int i, int j);
    int degree(int v) const;
    std::vector<int> degrees() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n == b.n && a.edges == b.edges;
    }
    friend bool operator<(const Graph& a, const Graph& b) {
        return a.n != b.n ? a.n < b.n : a.edges < b.edges;
    }
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const {
        return EdgeBitsHash{}(g.edges) * 31 + static_cast<std::size_t>(g.n);
    }
};

Graph make_graph(int n, std::span<const std::pair<int, int>> pairs);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

// Union of the circulant cycles C(s) for s in steps, on the vertex set F_p.
Graph circulant_cycles(int p, const std::vector<int>& steps);

// Complete graph and empty graph helpers.
Graph complete_graph(int n);
Graph empty_graph(int n);

struct DegreeProfile {
    std::vector<int> degrees;              // by vertex
    std::vector<std::pair<int, int>> histogram;  // (degree, count), ascending
};

DegreeProfile degree_profile(const Graph& g);
std::optional<int> is_regular(const Graph& g);
bool is_connected(const Graph& g);

struct Component {
    Graph graph;                // induced subgraph, relabeled 0..k-1
    std::vector<int> vertices;  // original labels, ascending; vertices[i] -> i
};

std::vector<Component> connected_components(const Graph& g);

}  // namespace evasive
