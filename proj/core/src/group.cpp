#include "evasive/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "evasive/errors.hpp"

namespace evasive {

bool GeneratedGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

GeneratedGroup group_closure(const std::vector<Permutation>& gens, std::size_t cap) {
    if (gens.empty()) throw InputError("group_closure: no generators");
    int degree = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw InputError("group_closure: generators have mixed degrees");

    std::set<Permutation> seen;
    std::deque<Permutation> todo;
    Permutation id(degree);
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        Permutation cur = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : gens) {
            Permutation next = g * cur;
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw CapError("group_closure: closure exceeds cap of " + std::to_string(cap) +
                                   " elements");
                todo.push_back(std::move(next));
            }
        }
    }

    GeneratedGroup out;
    out.degree = degree;
    out.generators = gens;
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

std::vector<std::vector<int>> point_orbits(const GeneratedGroup& g) {
    std::vector<int> orbit_of(g.degree, -1);
    std::vector<std::vector<int>> orbits;
    for (int start = 0; start < g.degree; ++start) {
        if (orbit_of[start] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> stack{start}, members{start};
        orbit_of[start] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& gen : g.generators) {
                int y = gen(x);
                if (orbit_of[y] < 0) {
                    orbit_of[y] = id;
                    stack.push_back(y);
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    return orbits;
}

std::vector<Graph> edge_orbits(const GeneratedGroup& g, int n) {
    if (g.degree != n)
        throw InputError("edge_orbits: group degree " + std::to_string(g.degree) +
                         " does not match vertex count " + std::to_string(n));
    std::vector<Permutation> pair_gens;
    pair_gens.reserve(g.generators.size());
    for (const auto& gen : g.generators) pair_gens.push_back(pair_action(gen));

    int total = n * (n - 1) / 2;
    std::vector<int> orbit_of(total, -1);
    std::vector<Graph> orbits;
    for (int start = 0; start < total; ++start) {
        if (orbit_of[start] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        Graph orb;
        orb.n = n;
        std::vector<int> stack{start};
        orbit_of[start] = id;
        orb.edges.set(start);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& pg : pair_gens) {
                int y = pg(x);
                if (orbit_of[y] < 0) {
                    orbit_of[y] = id;
                    orb.edges.set(y);
                    stack.push_back(y);
                }
            }
        }
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

}  // namespace evasive
