#include "evasive/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "evasive/errors.hpp"

namespace evasive {

Permutation::Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v]) throw InputError("permutation images are not a bijection");
        seen[v] = true;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InputError("permutation degrees differ");
    std::vector<std::uint8_t> c(a.degree());
    for (int x = 0; x < a.degree(); ++x) c[x] = a.img_[b.img_[x]];
    Permutation out;
    out.img_ = std::move(c);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> inv(img_.size());
    for (int x = 0; x < degree(); ++x) inv[img_[x]] = static_cast<std::uint8_t>(x);
    Permutation out;
    out.img_ = std::move(inv);
    return out;
}

int Permutation::order() const {
    int ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        do {
            seen[y] = true;
            y = img_[y];
            ++len;
        } while (y != x);
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (int x = 0; x < degree(); ++x) {
        if (seen[x] || img_[x] == x) {
            seen[x] = true;
            continue;
        }
        any = true;
        out << '(';
        int y = x;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << y;
            first = false;
            seen[y] = true;
            y = img_[y];
        } while (y != x);
        out << ')';
    }
    return any ? out.str() : "()";
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
    Permutation result(degree);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw InputError("cycle notation: expected '(' at position " + std::to_string(pos));
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw InputError("cycle notation: expected a digit at position " + std::to_string(pos));
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v >= degree)
                throw InputError("cycle notation: point " + std::to_string(v) +
                                 " outside degree " + std::to_string(degree));
            cycle.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size()) throw InputError("cycle notation: unterminated cycle");
        ++pos;  // ')'
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
            for (std::size_t j = i + 1; j < cycle.size(); ++j)
                if (cycle[i] == cycle[j]) throw InputError("cycle notation: repeated point in a cycle");
        }
        Permutation c(degree);
        std::vector<std::uint8_t> img = c.images();
        for (std::size_t i = 0; i < cycle.size(); ++i)
            img[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
        result = Permutation(std::move(img)) * result;
        skip_ws();
    }
    return result;
}

Graph apply(const Permutation& p, const Graph& g) {
    if (p.degree() != g.n) throw InputError("apply: permutation degree does not match graph");
    Graph out;
    out.n = g.n;
    g.edges.for_each_bit([&](int b) {
        auto [i, j] = pair_of_index(b);
        out.edges.set(pair_index(p(i), p(j)));
    });
    return out;
}

Permutation pair_action(const Permutation& p) {
    int n = p.degree();
    std::vector<std::uint8_t> img(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            img[pair_index(i, j)] = static_cast<std::uint8_t>(pair_index(p(i), p(j)));
    return Permutation(std::move(img));
}

}  // namespace evasive
