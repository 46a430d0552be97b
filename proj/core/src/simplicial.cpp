#include "evasive/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_set>

#include "evasive/errors.hpp"

namespace evasive {

bool SimplicialComplex::is_face(std::uint64_t mask) const {
    for (auto f : facets)
        if ((mask & ~f) == 0) return true;
    return false;
}

int SimplicialComplex::label_position(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

SimplicialComplex make_complex(std::vector<std::string> labels,
                               std::vector<std::uint64_t> facet_masks) {
    if (labels.size() > 63) throw CapError("make_complex: at most 63 vertex labels supported");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) throw InputError("make_complex: duplicate label " + labels[i]);

    std::uint64_t valid = labels.empty() ? 0 : (std::uint64_t{1} << labels.size()) - 1;
    for (auto f : facet_masks)
        if (f & ~valid) throw InputError("make_complex: facet uses bits outside the universe");

    // Keep only maximal facets.
    std::sort(facet_masks.begin(), facet_masks.end());
    facet_masks.erase(std::unique(facet_masks.begin(), facet_masks.end()), facet_masks.end());
    std::vector<std::uint64_t> maximal;
    for (auto f : facet_masks) {
        bool dominated = false;
        for (auto g : facet_masks)
            if (f != g && (f & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }

    // Drop labels not used by any facet.
    std::uint64_t used = 0;
    for (auto f : maximal) used |= f;
    SimplicialComplex k;
    std::vector<int> remap(labels.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if ((used >> i) & 1) {
            remap[i] = static_cast<int>(k.labels.size());
            k.labels.push_back(labels[i]);
        }
    }
    for (auto f : maximal) {
        std::uint64_t g = 0;
        for (std::uint64_t m = f; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            g |= std::uint64_t{1} << remap[b];
        }
        k.facets.push_back(g);
    }
    std::sort(k.facets.begin(), k.facets.end());
    return k;
}

SimplicialComplex make_complex(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> labels;
    std::map<std::string, int> pos;
    for (const auto& f : facets)
        for (const auto& v : f)
            if (pos.emplace(v, static_cast<int>(labels.size())).second) labels.push_back(v);
    std::vector<std::uint64_t> masks;
    if (labels.size() > 63) throw CapError("make_complex: at most 63 vertex labels supported");
    for (const auto& f : facets) {
        std::uint64_t m = 0;
        for (const auto& v : f) m |= std::uint64_t{1} << pos[v];
        masks.push_back(m);
    }
    return make_complex(std::move(labels), std::move(masks));
}

SimplicialComplex full_simplex(const std::vector<std::string>& vertices) {
    return make_complex({vertices});
}

SimplicialComplex boundary_of_simplex(const std::vector<std::string>& vertices) {
    std::vector<std::vector<std::string>> facets;
    for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
        std::vector<std::string> f;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (i != skip) f.push_back(vertices[i]);
        facets.push_back(std::move(f));
    }
    return make_complex(facets);
}

SimplicialComplex cone(const SimplicialComplex& base, const std::string& apex) {
    if (base.label_position(apex) >= 0) throw InputError("cone: apex label already present");
    std::vector<std::string> labels = base.labels;
    labels.push_back(apex);
    std::uint64_t apex_bit = std::uint64_t{1} << base.vertex_count();
    std::vector<std::uint64_t> facets;
    if (base.is_void()) {
        facets.push_back(apex_bit);
    } else {
        for (auto f : base.facets) facets.push_back(f | apex_bit);
    }
    return make_complex(std::move(labels), std::move(facets));
}

std::vector<std::uint64_t> all_faces(const SimplicialComplex& k, std::size_t cap) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (auto f : k.facets) {
        if (f == 0) continue;
        if (seen.insert(f).second) stack.push_back(f);
    }
    std::vector<std::uint64_t> out(stack);
    while (!stack.empty()) {
        std::uint64_t f = stack.back();
        stack.pop_back();
        for (std::uint64_t m = f; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t sub = f & ~(std::uint64_t{1} << b);
            if (sub && seen.insert(sub).second) {
                if (seen.size() > cap)
                    throw CapError("all_faces: more than " + std::to_string(cap) + " faces");
                stack.push_back(sub);
                out.push_back(sub);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long euler_characteristic(const SimplicialComplex& k) {
    if (k.is_void()) throw InputError("euler_characteristic: void complex");
    long long chi = 0;
    for (auto f : all_faces(k)) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
    return chi;
}

namespace {

SimplicialComplex restrict_facets(const SimplicialComplex& k, int pos, bool link_mode) {
    std::uint64_t bit = std::uint64_t{1} << pos;
    std::vector<std::uint64_t> masks;
    bool saw_empty_result = false;
    for (auto f : k.facets) {
        if (link_mode && !(f & bit)) continue;
        std::uint64_t g = f & ~bit;
        masks.push_back(g);
        if (g == 0) saw_empty_result = true;
    }
    if (masks.empty() || (saw_empty_result && masks.size() == 1))
        return make_complex(k.labels, {0});  // the empty complex {∅}
    return make_complex(k.labels, std::move(masks));
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const std::string& vertex) {
    int pos = k.label_position(vertex);
    if (pos < 0) throw InputError("link: " + vertex + " is not a vertex");
    return restrict_facets(k, pos, /*link_mode=*/true);
}

SimplicialComplex deletion(const SimplicialComplex& k, const std::string& vertex) {
    int pos = k.label_position(vertex);
    if (pos < 0) throw InputError("deletion: " + vertex + " is not a vertex");
    return restrict_facets(k, pos, /*link_mode=*/false);
}

namespace {

// Memo key: facets relabeled by a signature-based vertex order.  Equal keys
// imply isomorphic complexes, so the cached verdict transfers.
std::vector<std::uint64_t> canonical_key(const SimplicialComplex& k) {
    int n = k.vertex_count();
    std::vector<std::vector<int>> sig(n);
    for (auto f : k.facets) {
        int size = std::popcount(f);
        for (std::uint64_t m = f; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            sig[b].push_back(size);
        }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        std::sort(sig[i].begin(), sig[i].end());
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> remap(n);
    for (int i = 0; i < n; ++i) remap[order[i]] = i;
    std::vector<std::uint64_t> key;
    key.reserve(k.facets.size() + 1);
    key.push_back(static_cast<std::uint64_t>(n));
    for (auto f : k.facets) {
        std::uint64_t g = 0;
        for (std::uint64_t m = f; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            g |= std::uint64_t{1} << remap[b];
        }
        key.push_back(g);
    }
    std::sort(key.begin() + 1, key.end());
    return key;
}

bool non_evasive_rec(const SimplicialComplex& k,
                     std::map<std::vector<std::uint64_t>, bool>& memo) {
    if (k.is_empty_complex()) return false;
    if (k.vertex_count() == 1) return true;

    // A vertex lying in every facet makes the complex a cone, and cones are
    // non-evasive (recurse through any other vertex).
    std::uint64_t common = ~std::uint64_t{0};
    for (auto f : k.facets) common &= f;
    if (common) return true;

    auto key = canonical_key(k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    bool result = false;
    for (int v = 0; v < k.vertex_count() && !result; ++v) {
        SimplicialComplex lk = restrict_facets(k, v, true);
        if (!non_evasive_rec(lk, memo)) continue;
        SimplicialComplex del = restrict_facets(k, v, false);
        result = non_evasive_rec(del, memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

bool is_non_evasive(const SimplicialComplex& k) {
    if (k.is_void()) throw InputError("is_non_evasive: void complex");
    all_faces(k);  // enforces the face-count cap
    std::map<std::vector<std::uint64_t>, bool> memo;
    return non_evasive_rec(k, memo);
}

SimplicialComplex fixed_point_complex(const SimplicialComplex& k, const GeneratedGroup& group) {
    if (group.degree != k.vertex_count())
        throw InputError("fixed_point_complex: group degree does not match universe size");

    for (const auto& gen : group.generators) {
        for (auto f : k.facets) {
            std::uint64_t img = 0;
            for (std::uint64_t m = f; m;) {
                int b = std::countr_zero(m);
                m &= m - 1;
                img |= std::uint64_t{1} << gen(b);
            }
            if (!std::binary_search(k.facets.begin(), k.facets.end(), img))
                throw InputError("fixed_point_complex: group does not preserve the facet set");
        }
    }

    auto orbits = point_orbits(group);
    std::vector<std::uint64_t> orbit_masks;
    std::vector<std::string> orbit_labels;
    for (const auto& orb : orbits) {
        std::uint64_t m = 0;
        std::string lab;
        for (int v : orb) {
            m |= std::uint64_t{1} << v;
            if (!lab.empty()) lab += ',';
            lab += k.labels[v];
        }
        if (!k.is_face(m)) continue;
        orbit_masks.push_back(m);
        orbit_labels.push_back(std::move(lab));
    }

    int t = static_cast<int>(orbit_masks.size());
    if (t > 20) throw CapError("fixed_point_complex: too many orbit vertices");
    std::vector<std::uint64_t> face_sets;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << t); ++s) {
        std::uint64_t u = 0;
        for (std::uint64_t m = s; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            u |= orbit_masks[b];
        }
        if (k.is_face(u)) face_sets.push_back(s);
    }
    return make_complex(std::move(orbit_labels), std::move(face_sets));
}

bool is_connected_complex(const SimplicialComplex& k) {
    if (k.is_void()) throw InputError("is_connected_complex: void complex");
    int n = k.vertex_count();
    if (n == 0) return false;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto f : k.facets) {
        int first = -1;
        for (std::uint64_t m = f; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            if (first < 0) first = b;
            else parent[find(b)] = find(first);
        }
    }
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

bool is_collapsible_exhaustive(const SimplicialComplex& k) {
    if (k.is_void() || k.is_empty_complex())
        throw InputError("is_collapsible_exhaustive: need a complex with a vertex");
    auto faces = all_faces(k);
    int nf = static_cast<int>(faces.size());
    if (nf > 24) throw CapError("is_collapsible_exhaustive: more than 24 faces");

    std::vector<std::uint32_t> supersets(nf, 0);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            if (i != j && (faces[i] & ~faces[j]) == 0) supersets[i] |= 1u << j;

    std::unordered_set<std::uint32_t> failed;
    auto rec = [&](auto&& self, std::uint32_t alive) -> bool {
        if (std::popcount(alive) == 1) {
            int only = std::countr_zero(alive);
            return std::popcount(faces[only]) == 1;
        }
        if (failed.contains(alive)) return false;
        for (std::uint32_t m = alive; m;) {
            int s = std::countr_zero(m);
            m &= m - 1;
            std::uint32_t sup = supersets[s] & alive;
            if (std::popcount(sup) != 1) continue;
            std::uint32_t next = alive & ~(1u << s) & ~sup;
            if (self(self, next)) return true;
        }
        failed.insert(alive);
        return false;
    };
    return rec(rec, (std::uint32_t{1} << nf) - 1);
}

SimplicialComplex parse_facet_text(const std::string& text) {
    std::vector<std::vector<std::string>> facets;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::vector<std::string> f;
        std::string w;
        while (words >> w) f.push_back(w);
        if (!f.empty()) facets.push_back(std::move(f));
    }
    if (facets.empty()) throw InputError("parse_facet_text: no facets");
    return make_complex(facets);
}

std::string format_facet_text(const SimplicialComplex& k) {
    std::vector<std::vector<std::string>> rows;
    for (auto f : k.facets) {
        std::vector<std::string> row;
        for (std::uint64_t m = f; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            row.push_back(k.labels[b]);
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

}  // namespace evasive
