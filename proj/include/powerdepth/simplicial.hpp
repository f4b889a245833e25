#pragma once
// Simplicial complexes given by their facet lists.

#include "powerdepth/hypergraph.hpp"
#include "powerdepth/vertexset.hpp"

#include <vector>

namespace powerdepth {

struct SimplicialComplex {
    int n = 0;
    // Maximal faces, ascending numeric. Empty vector = the void complex (no
    // faces at all); the single facet {} = the complex whose only face is empty.
    std::vector<VertexSet> facets;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n == b.n && a.facets == b.facets;
    }
};

// Prunes non-maximal faces and sorts.
SimplicialComplex make_complex(int n, std::vector<VertexSet> faces);

bool is_void(const SimplicialComplex& k);
VertexSet complex_vertices(const SimplicialComplex& k);
bool is_face(const SimplicialComplex& k, VertexSet f);

// Void and {} are connected; otherwise every two vertices must be joined
// through shared facets.
bool is_connected(const SimplicialComplex& k);

// Graph on the complex's vertices whose edges are the 2-element faces.
Graph one_skeleton(const SimplicialComplex& k);

// Diameter of the 1-skeleton over the complex's vertices is at most d.
// At most one vertex passes trivially; disconnected fails.
bool skeleton_diameter_le(const SimplicialComplex& k, int d);

// Facets of the full independence complex: maximal sets containing no edge.
SimplicialComplex independence_complex(const Hypergraph& h);

}  // namespace powerdepth
