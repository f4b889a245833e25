#pragma once
// Depth of R/I^2 below two: zero via 2-saturating sets, the one/two boundary
// via connectivity of degree-a complexes and skeleton diameter.

#include "powerdepth/depthclass.hpp"
#include "powerdepth/hypergraph.hpp"
#include "powerdepth/oracle.hpp"
#include "powerdepth/saturating.hpp"
#include "powerdepth/simplicial.hpp"

#include <optional>

namespace powerdepth {

// The degree-a complex of I^2, built without polynomial arithmetic: F is a
// face exactly when the support of a, clipped to the complement of F, is
// 2-saturating in the restriction to that complement. Requires a in {0,1}^n.
SimplicialComplex delta_a_combinatorial(const Hypergraph& h, const MultiDegree& a);

// Diameter of the independence complex's 1-skeleton is at most 2. Computed
// twice: BFS on the skeleton, and the pairwise rule that every 2-element edge
// {i,j} between skeleton vertices needs a third skeleton vertex non-adjacent
// to both. Depth >= 2 for I^2 forces this; the converse can fail.
bool skeleton_diameter_ok(const Hypergraph& h);

struct GraphDepthConditions {
    bool no_dominating_triangle = false;
    // diameter of the complement graph at most 2
    bool complement_diameter_ok = false;
    // every triangle t leaves >= 2 vertices outside N(t) and the complement
    // graph restricted to them connected
    bool triangle_neighborhoods_ok = false;
};

GraphDepthConditions graph_depth_conditions(const Graph& g);

// All three conditions; for graphs this decides depth >= 2 exactly.
bool depth_ge_2_graph(const Graph& g);

struct GraphDepthReport {
    DepthClass depth_class = DepthClass::GeTwo;
    GraphDepthConditions conditions;
    std::optional<SaturatingCertificate> zero_certificate;  // dominating triangle when ZERO
};

GraphDepthReport depth_class_graph(const Graph& g);

// Literal two-sided reading for a bipartite graph with parts f and gside:
// depth >= 2 unless some vertex's neighborhood is the entire other side.
// Known to disagree with the exact classification on some inputs; callers
// should treat the oracle as authoritative.
bool depth_ge_2_bipartite(const Graph& g, VertexSet f, VertexSet gside);

struct HypergraphDepthReport {
    bool depth_zero = false;
    std::optional<SaturatingCertificate> zero_certificate;
    bool skeleton_diameter_ok = false;           // necessary for depth >= 2, not sufficient
    std::optional<DepthClass> oracle_class;      // filled for n <= 10
};

HypergraphDepthReport hypergraph_depth_report(const Hypergraph& h);

}  // namespace powerdepth
