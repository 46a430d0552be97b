#include "evasive/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "evasive/errors.hpp"

namespace evasive {

Graph::Graph(int vertex_count) : n(vertex_count) {
    if (n < 2 || n > kMaxVertices)
        throw InputError("vertex count must be between 2 and 16, got " + std::to_string(n));
}

void Graph::add_edge(int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw InputError("bad edge {" + std::to_string(i) + "," + std::to_string(j) +
                         "} for a graph on " + std::to_string(n) + " vertices");
    edges.set(pair_index(i, j));
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u)
        if (u != v && has_edge(u, v)) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n, 0);
    edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        ++d[i];
        ++d[j];
    });
    return d;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> pairs) {
    Graph g(n);
    for (auto [i, j] : pairs) g.add_edge(i, j);
    return g;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return make_graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    c.edges = full_edge_mask(g.n).and_not(g.edges);
    return c;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    if (g1.n + g2.n > kMaxVertices)
        throw InputError("disjoint_union: combined size exceeds 16 vertices");
    Graph g(g1.n + g2.n);
    g1.edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        g.add_edge(i, j);
    });
    g2.edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        g.add_edge(g1.n + i, g1.n + j);
    });
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int i = 0; i < g1.n; ++i)
        for (int j = 0; j < g2.n; ++j) g.add_edge(i, g1.n + j);
    return g;
}

Graph circulant_cycles(int p, const std::vector<int>& steps) {
    static const int kPrimes[] = {3, 5, 7, 11, 13};
    if (std::find(std::begin(kPrimes), std::end(kPrimes), p) == std::end(kPrimes))
        throw InputError("circulant_cycles: p must be an odd prime <= 13, got " + std::to_string(p));
    if (steps.empty()) throw InputError("circulant_cycles: empty step set");
    Graph g(p);
    for (int s : steps) {
        if (s < 1 || s > (p - 1) / 2)
            throw InputError("circulant_cycles: step " + std::to_string(s) +
                             " outside 1..(p-1)/2 for p=" + std::to_string(p));
        for (int x = 0; x < p; ++x) g.add_edge(x, (x + s) % p);
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    g.edges = full_edge_mask(n);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees = g.degrees();
    std::map<int, int> h;
    for (int d : p.degrees) ++h[d];
    p.histogram.assign(h.begin(), h.end());
    return p;
}

std::optional<int> is_regular(const Graph& g) {
    auto d = g.degrees();
    for (int v = 1; v < g.n; ++v)
        if (d[v] != d[0]) return std::nullopt;
    return d[0];
}

namespace {

// Adjacency rows as vertex bitmasks.
std::vector<std::uint32_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint32_t> row(g.n, 0);
    g.edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        row[i] |= 1u << j;
        row[j] |= 1u << i;
    });
    return row;
}

}  // namespace

bool is_connected(const Graph& g) {
    auto row = adjacency_rows(g);
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= row[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint32_t{1} << g.n) - 1;
}

std::vector<Component> connected_components(const Graph& g) {
    auto row = adjacency_rows(g);
    std::vector<Component> out;
    std::uint32_t done = 0;
    for (int start = 0; start < g.n; ++start) {
        if ((done >> start) & 1) continue;
        std::uint32_t comp = 1u << start, frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= row[v];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        done |= comp;
        Component c;
        for (std::uint32_t m = comp; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            c.vertices.push_back(v);
        }
        int k = static_cast<int>(c.vertices.size());
        // Components may have a single vertex; bypass the n >= 2 constructor check.
        c.graph.n = k;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (g.has_edge(c.vertices[a], c.vertices[b]))
                    c.graph.edges.set(pair_index(a, b));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace evasive
