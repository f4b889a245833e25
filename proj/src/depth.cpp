#include "powerdepth/depth.hpp"

#include <stdexcept>

namespace powerdepth {

SimplicialComplex delta_a_combinatorial(const Hypergraph& h, const MultiDegree& a) {
    if (static_cast<int>(a.size()) != h.n)
        throw std::invalid_argument("delta_a_combinatorial: degree length mismatch");
    VertexSet ha;
    for (int i = 0; i < h.n; ++i) {
        if (a[static_cast<size_t>(i)] != 0 && a[static_cast<size_t>(i)] != 1)
            throw std::invalid_argument("delta_a_combinatorial: degree entries must be 0 or 1");
        if (a[static_cast<size_t>(i)] == 1) ha = ha.with(i);
    }
    if (h.n > 20) throw std::invalid_argument("delta_a_combinatorial: too many vertices");
    std::vector<VertexSet> faces;
    for_each_subset(VertexSet::full(h.n), [&](VertexSet f) {
        VertexSet rest = VertexSet::full(h.n) - f;
        if (is_2_saturating(induced(h, rest), ha & rest)) faces.push_back(f);
    });
    return make_complex(h.n, std::move(faces));
}

bool skeleton_diameter_ok(const Hypergraph& h) {
    bool direct = skeleton_diameter_le(independence_complex(h), 2);

    VertexSet skel;  // vertices of the independence complex
    for (int v = 0; v < h.n; ++v)
        if (!has_edge(h, VertexSet::single(v))) skel = skel.with(v);
    bool pairwise = true;
    if (has_empty_edge(h)) skel = VertexSet{};
    for (VertexSet e : h.edges) {
        if (!pairwise) break;
        if (e.count() != 2 || !e.subset_of(skel)) continue;
        bool bridged = false;
        for_each_vertex(skel - e, [&](int w) {
            if (bridged) return;
            VertexSet p1 = VertexSet::single(w) | VertexSet::single(e.lowest());
            VertexSet p2 = VertexSet::single(w) | e.without(e.lowest());
            if (!has_edge(h, p1) && !has_edge(h, p2)) bridged = true;
        });
        if (!bridged) pairwise = false;
    }
    if (direct != pairwise) throw std::logic_error("skeleton diameter rules disagree");
    return direct;
}

GraphDepthConditions graph_depth_conditions(const Graph& g) {
    GraphDepthConditions out;
    out.no_dominating_triangle = !has_dominating_triangle(g).has_value();
    Graph comp = complement_graph(g);
    int d = graph_diameter(comp);
    out.complement_diameter_ok = (d != kInfiniteDiameter && d <= 2);
    out.triangle_neighborhoods_ok = true;
    for (VertexSet t : triangles(g)) {
        VertexSet outside = VertexSet::full(g.h.n) - neighborhood(g, t);
        if (outside.count() < 2 || graph_diameter(comp, outside) == kInfiniteDiameter) {
            out.triangle_neighborhoods_ok = false;
            break;
        }
    }
    return out;
}

bool depth_ge_2_graph(const Graph& g) {
    GraphDepthConditions c = graph_depth_conditions(g);
    return c.no_dominating_triangle && c.complement_diameter_ok && c.triangle_neighborhoods_ok;
}

GraphDepthReport depth_class_graph(const Graph& g) {
    GraphDepthReport rep;
    rep.conditions = graph_depth_conditions(g);
    if (!rep.conditions.no_dominating_triangle) {
        rep.depth_class = DepthClass::Zero;
        rep.zero_certificate = find_2_saturating_set(g.h);
        if (!rep.zero_certificate) throw std::logic_error("dominating triangle without a certificate");
        return rep;
    }
    bool ge2 = rep.conditions.complement_diameter_ok && rep.conditions.triangle_neighborhoods_ok;
    rep.depth_class = ge2 ? DepthClass::GeTwo : DepthClass::One;
    return rep;
}

bool depth_ge_2_bipartite(const Graph& g, VertexSet f, VertexSet gside) {
    if ((f & gside) != VertexSet{} || (f | gside) != VertexSet::full(g.h.n))
        throw std::invalid_argument("depth_ge_2_bipartite: parts must partition the vertices");
    for (VertexSet e : g.h.edges)
        if (e.subset_of(f) || e.subset_of(gside))
            throw std::invalid_argument("depth_ge_2_bipartite: an edge stays inside one part");
    bool bad = false;
    for_each_vertex(f, [&](int i) {
        if (g.adj[static_cast<size_t>(i)] == gside) bad = true;
    });
    for_each_vertex(gside, [&](int j) {
        if (g.adj[static_cast<size_t>(j)] == f) bad = true;
    });
    return !bad;
}

HypergraphDepthReport hypergraph_depth_report(const Hypergraph& h) {
    HypergraphDepthReport rep;
    DepthPositiveResult pos = depth_positive_second_power(h);
    rep.depth_zero = !pos.positive;
    rep.zero_certificate = std::move(pos.certificate);
    rep.skeleton_diameter_ok = skeleton_diameter_ok(h);
    if (h.n <= 10) rep.oracle_class = depth_class_oracle(ideal_square(edge_ideal(h)));
    return rep;
}

}  // namespace powerdepth
