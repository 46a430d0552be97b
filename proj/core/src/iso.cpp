#include "evasive/iso.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "evasive/errors.hpp"

namespace evasive {

namespace {

constexpr int kIsoCap = 10;

void require_iso_size(const Graph& g, const char* what) {
    if (g.n > kIsoCap)
        throw CapError(std::string(what) + ": exhaustive search capped at 10 vertices, got " +
                       std::to_string(g.n));
}

std::array<std::uint32_t, kMaxVertices> adjacency_rows(const Graph& g) {
    std::array<std::uint32_t, kMaxVertices> row{};
    g.edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        row[i] |= 1u << j;
        row[j] |= 1u << i;
    });
    return row;
}

// Processing order for backtracking: highest degree first, then greedily by
// adjacency to already-ordered vertices.
std::vector<int> search_order(const Graph& g) {
    auto deg = g.degrees();
    auto row = adjacency_rows(g);
    std::vector<int> order;
    std::uint32_t placed = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1, best_link = -1, best_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if ((placed >> v) & 1) continue;
            int link = std::popcount(row[v] & placed);
            if (link > best_link || (link == best_link && deg[v] > best_deg)) {
                best = v;
                best_link = link;
                best_deg = deg[v];
            }
        }
        order.push_back(best);
        placed |= 1u << best;
    }
    return order;
}

}  // namespace

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Graph relabel(const Graph& g, std::span<const int> images) {
    if (static_cast<int>(images.size()) != g.n)
        throw InputError("relabel: permutation degree does not match vertex count");
    Graph out;
    out.n = g.n;
    g.edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        out.edges.set(pair_index(images[i], images[j]));
    });
    return out;
}

std::uint64_t aut_group_size(const Graph& g) {
    require_iso_size(g, "aut_group_size");
    const int n = g.n;
    auto row = adjacency_rows(g);
    auto deg = g.degrees();
    auto order = search_order(g);

    std::array<int, kMaxVertices> img{};
    std::uint32_t used = 0;
    std::uint64_t count = 0;

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            ++count;
            return;
        }
        int v = order[k];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            if (deg[w] != deg[v]) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int u = order[i];
                ok = (((row[v] >> u) & 1) == ((row[w] >> img[u]) & 1));
            }
            if (!ok) continue;
            img[v] = w;
            used |= 1u << w;
            self(self, k + 1);
            used &= ~(1u << w);
        }
    };
    rec(rec, 0);
    return count;
}

std::uint64_t iso_class_size(const Graph& g) { return factorial(g.n) / aut_group_size(g); }

Graph canonical_form(const Graph& g) {
    require_iso_size(g, "canonical_form");
    const int n = g.n;
    auto row = adjacency_rows(g);

    // best[k] is the k-bit adjacency block of the k-th vertex in the minimal
    // ordering found so far (bit toward earlier vertices is more significant).
    std::array<std::uint32_t, kMaxVertices> best;
    best.fill(UINT32_MAX);
    std::array<int, kMaxVertices> chosen{};
    std::uint32_t used = 0;

    struct Cand {
        std::uint32_t block;
        int v;
    };

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) return;
        std::array<Cand, kMaxVertices> cands;
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint32_t block = 0;
            for (int i = 0; i < k; ++i)
                block |= ((row[v] >> chosen[i]) & 1u) << (k - 1 - i);
            cands[nc++] = {block, v};
        }
        std::sort(cands.begin(), cands.begin() + nc,
                  [](const Cand& a, const Cand& b) {
                      return a.block != b.block ? a.block < b.block : a.v < b.v;
                  });
        std::array<Cand, kMaxVertices> kept{};
        int nk = 0;
        for (int c = 0; c < nc; ++c) {
            auto [block, v] = cands[c];
            if (block > best[k]) break;
            // Skip v when an already-kept same-block candidate w is a twin of v
            // (swapping them is an automorphism, so the subtrees coincide).
            bool twin = false;
            for (int t = 0; t < nk && !twin; ++t) {
                auto [wb, w] = kept[t];
                if (wb != block) continue;
                std::uint32_t other = ~((1u << v) | (1u << w));
                twin = (row[v] & other) == (row[w] & other);
            }
            if (twin) continue;
            kept[nk] = {block, v};
            ++nk;
            if (block < best[k]) {
                best[k] = block;
                for (int j = k + 1; j < n; ++j) best[j] = UINT32_MAX;
            }
            chosen[k] = v;
            used |= 1u << v;
            self(self, k + 1);
            used &= ~(1u << v);
        }
    };
    rec(rec, 0);

    Graph out;
    out.n = n;
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i)
            if ((best[k] >> (k - 1 - i)) & 1) out.edges.set(pair_index(i, k));
    return out;
}

namespace {

std::optional<std::vector<int>> embedding_search(const Graph& g, const Graph& h, bool exact) {
    if (g.n != h.n) throw InputError("subgraph search: vertex counts differ");
    require_iso_size(g, "subgraph search");
    if (exact ? g.edge_count() != h.edge_count() : g.edge_count() > h.edge_count())
        return std::nullopt;

    auto dg = g.degrees(), dh = h.degrees();
    {
        auto a = dg, b = dh;
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        for (int i = 0; i < g.n; ++i)
            if (exact ? a[i] != b[i] : a[i] > b[i]) return std::nullopt;
    }

    const int n = g.n;
    auto rg = adjacency_rows(g), rh = adjacency_rows(h);
    auto order = search_order(g);
    std::vector<int> img(n, -1);
    std::uint32_t used = 0;

    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            if (exact ? dh[w] != dg[v] : dh[w] < dg[v]) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int u = order[i];
                bool eg = (rg[v] >> u) & 1;
                bool eh = (rh[w] >> img[u]) & 1;
                ok = exact ? (eg == eh) : (!eg || eh);
            }
            if (!ok) continue;
            img[v] = w;
            used |= 1u << w;
            if (self(self, k + 1)) return true;
            used &= ~(1u << w);
            img[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return img;
}

}  // namespace

std::optional<std::vector<int>> find_spanning_embedding(const Graph& g, const Graph& h) {
    return embedding_search(g, h, /*exact=*/false);
}

bool is_spanning_subgraph_iso(const Graph& g, const Graph& h) {
    return find_spanning_embedding(g, h).has_value();
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    return embedding_search(g, h, /*exact=*/true);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

std::uint64_t wormald_bound(const Graph& g) {
    auto r = is_regular(g);
    if (!r) throw InputError("wormald_bound: graph is not regular");
    if (*r == 0) throw InputError("wormald_bound: degree must be positive");
    if (!is_connected(g)) throw InputError("wormald_bound: graph is not connected");

    std::uint64_t bound = std::uint64_t(*r) * g.n;
    if (*r < 3) return bound;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (p > *r - 1) break;
        std::uint64_t beta = 0;
        for (long long q = p; q <= *r - 1; q *= p) beta += std::uint64_t((g.n - 2) / q);
        for (std::uint64_t t = 0; t < beta; ++t) bound *= p;
    }
    return bound;
}

}  // namespace evasive
