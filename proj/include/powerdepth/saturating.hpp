#pragma once
// 2-saturating sets and the positivity test for the depth of R/I^2.
//
// U is 2-saturating when U is indecomposable but removing any vertex i of the
// hypergraph's vertex set leaves U \ i decomposable in the contraction H(i).
// Such a set certifies a monomial in the saturation of I^2 that is missing
// from I^2 itself, i.e. depth zero.

#include "powerdepth/hypergraph.hpp"
#include "powerdepth/vertexset.hpp"

#include <optional>
#include <vector>

namespace powerdepth {

struct SpecialTriangle {
    VertexSet f1, f2, f3;  // edges of the hypergraph
    int v1 = -1;           // v1 in f1 & f2 - f3
    int v2 = -1;           // v2 in f2 & f3 - f1
    int v3 = -1;           // v3 in f1 & f3 - f2
    bool empty_intersection = false;  // f1 & f2 & f3 == {}
};

// One decomposition per vertex i: edges f, g of the contraction H(i), disjoint,
// with union inside u \ i. f == g == {} encodes the empty edge of H(i).
struct VertexWitness {
    int vertex = -1;
    VertexSet f, g;
};

struct SaturatingCertificate {
    VertexSet u;
    enum class Kind { EmptyOrVertex, DominatingTriangle, General } kind = Kind::General;
    std::vector<VertexWitness> witnesses;  // one entry per vertex of the hypergraph
};

// Two disjoint edges inside u, or ({},{}) when the empty edge is present.
std::optional<std::pair<VertexSet, VertexSet>> find_decomposition(const Hypergraph& h, VertexSet u);
bool is_decomposable(const Hypergraph& h, VertexSet u);

// Every pair of edges meets (an empty edge meets nothing).
bool is_intersecting(const Hypergraph& h);

// Intersecting, and no single vertex carries the whole intersection pattern:
// the link of every vertex lying in an edge is non-intersecting.
bool is_loosely_intersecting(const Hypergraph& h);

// The section h|_u is intersecting and the link of every member of u inside
// the section is non-intersecting. Unlike is_loosely_intersecting this
// quantifies over all of u, so a member of u in no section edge fails.
bool loosely_intersecting_on(const Hypergraph& section_h, VertexSet u);

// Literal definition, replayable witness per vertex of h.verts.
std::optional<SaturatingCertificate> is_2_saturating(const Hypergraph& h, VertexSet u);

// Same predicate through the section characterization: (a) h|_u loosely
// intersecting on u; (b) every non-isolated vertex i of h.verts outside u has
// two disjoint link edges inside u, or one disjoint from a section edge.
bool is_2_saturating_sections(const Hypergraph& h, VertexSet u);

// Replays a certificate against the definition.
bool verify_certificate(const Hypergraph& h, const SaturatingCertificate& cert);

// Smallest 2-saturating set in (size, numeric) order, if any. Graph-shaped
// inputs scan dominating triangles; otherwise candidates are filtered by the
// section characterization before the literal check.
std::optional<SaturatingCertificate> find_2_saturating_set(const Hypergraph& h);

// All edge triples (indices ascending) admitting the three witness vertices;
// the flag keeps only triples whose three edges share nothing.
std::vector<SpecialTriangle> special_triangles(const Hypergraph& h, bool require_empty_intersection);

// Triangle whose vertices are adjacent to every vertex of the graph.
std::optional<VertexSet> has_dominating_triangle(const Graph& g);

struct DepthPositiveResult {
    bool positive = false;
    std::optional<SaturatingCertificate> certificate;  // present iff depth is zero
};

// depth R/I^2 > 0 iff no 2-saturating set exists.
DepthPositiveResult depth_positive_second_power(const Hypergraph& h);

}  // namespace powerdepth
