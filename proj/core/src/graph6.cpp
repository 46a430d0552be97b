#include "evasive/graph6.hpp"

#include "evasive/errors.hpp"

namespace evasive {

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw InputError("graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int total = g.n * (g.n - 1) / 2;
    for (int base = 0; base < total; base += 6) {
        int v = 0;
        for (int k = 0; k < 6; ++k) {
            int b = base + k;
            v = (v << 1) | (b < total && g.edges.test(b) ? 1 : 0);
        }
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw InputError("graph6: empty string");
    int n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 2 || n > kMaxVertices)
        throw InputError("graph6: vertex count " + std::to_string(n) +
                         " outside the supported range 2..16");
    int total = n * (n - 1) / 2;
    int bytes = (total + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + bytes)
        throw InputError("graph6: expected " + std::to_string(1 + bytes) + " characters for n=" +
                         std::to_string(n) + ", got " + std::to_string(s.size()));
    Graph g;
    g.n = n;
    for (int c = 0; c < bytes; ++c) {
        int v = static_cast<unsigned char>(s[1 + c]) - 63;
        if (v < 0 || v > 63) throw InputError("graph6: character out of range");
        for (int k = 0; k < 6; ++k) {
            int b = c * 6 + k;
            bool bit = (v >> (5 - k)) & 1;
            if (b < total) {
                if (bit) g.edges.set(b);
            } else if (bit) {
                throw InputError("graph6: nonzero padding bits");
            }
        }
    }
    return g;
}

}  // namespace evasive
