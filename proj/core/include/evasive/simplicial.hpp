#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evasive/group.hpp"

namespace evasive {

// Abstract simplicial complex: an ordered universe of labels plus the maximal
// faces as bitmasks over universe positions.  Normalized so that no facet
// contains another and every label occurs in some facet.  The complex whose
// only facet is the empty mask is the empty complex {∅}; a complex with no
// facets at all is void.
struct SimplicialComplex {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> facets;  // sorted

    int vertex_count() const { return static_cast<int>(labels.size()); }
    bool is_void() const { return facets.empty(); }
    bool is_empty_complex() const { return facets.size() == 1 && facets[0] == 0; }
    bool is_face(std::uint64_t mask) const;
    int label_position(const std::string& label) const;  // -1 if absent
};

constexpr std::size_t kFaceCap = std::size_t{1} << 20;

// Build a normalized complex.  Labels not covered by any facet are dropped.
SimplicialComplex make_complex(std::vector<std::string> labels,
                               std::vector<std::uint64_t> facet_masks);
SimplicialComplex make_complex(const std::vector<std::vector<std::string>>& facets);

SimplicialComplex full_simplex(const std::vector<std::string>& vertices);
SimplicialComplex boundary_of_simplex(const std::vector<std::string>& vertices);
SimplicialComplex cone(const SimplicialComplex& base, const std::string& apex);

// All nonempty faces (cap-checked).
std::vector<std::uint64_t> all_faces(const SimplicialComplex& k, std::size_t cap = kFaceCap);

// Alternating sum of face counts by dimension, empty face excluded.
long long euler_characteristic(const SimplicialComplex& k);

SimplicialComplex link(const SimplicialComplex& k, const std::string& vertex);
SimplicialComplex deletion(const SimplicialComplex& k, const std::string& vertex);

// Recursive definition: a single vertex, or some vertex whose link and
// deletion are both non-evasive.  {∅} is not non-evasive.
bool is_non_evasive(const SimplicialComplex& k);

// K^G: vertices are the orbits of the group on the universe that are faces of
// k; a set of orbits is a face iff its union is a face of k.  The group must
// preserve the facet set.
SimplicialComplex fixed_point_complex(const SimplicialComplex& k, const GeneratedGroup& group);

// Connectivity of the 1-skeleton.
bool is_connected_complex(const SimplicialComplex& k);

// Search over elementary collapse sequences; at most 24 nonempty faces.
bool is_collapsible_exhaustive(const SimplicialComplex& k);

// Facet-list text: one facet per line, whitespace-separated labels.
SimplicialComplex parse_facet_text(const std::string& text);
std::string format_facet_text(const SimplicialComplex& k);

}  // namespace evasive
