#include "powerdepth/coverideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace powerdepth {

Hypergraph cover_hypergraph(const Graph& g, bool minimal_only) {
    if (minimal_only) return make_hypergraph(g.h.n, VertexSet::full(g.h.n), minimal_covers(g.h));
    if (g.h.n > 20) throw std::invalid_argument("cover_hypergraph: too many vertices for the all-covers variant");
    std::vector<VertexSet> covers;
    for_each_subset(VertexSet::full(g.h.n), [&](VertexSet c) {
        if (is_cover(g.h, c)) covers.push_back(c);
    });
    return make_hypergraph(g.h.n, VertexSet::full(g.h.n), std::move(covers));
}

CoverSaturatingSets cover_saturating_sets(const Graph& g, VertexSet c) {
    if (has_edge(g.h, c)) {
        int u = c.lowest();
        int v = (c.without(u)).lowest();
        return CoverSaturatingSets{CoverSaturatingKind::EdgeCover,
                                   {VertexSet{}, VertexSet::single(u), VertexSet::single(v)}};
    }
    if (c.count() % 2 == 1 && is_induced_cycle(g, c))
        return CoverSaturatingSets{CoverSaturatingKind::OddCycleCover, {c}};
    return CoverSaturatingSets{CoverSaturatingKind::None, {}};
}

std::vector<AssociatedPrime> cover_ass_primes(const Graph& g) {
    Hypergraph covers = cover_hypergraph(g, true);
    std::vector<AssociatedPrime> out;
    for (VertexSet e : g.h.edges) {
        auto cert = is_2_saturating(induced(covers, e), VertexSet{});
        if (!cert) throw std::logic_error("edge rejected the empty 2-saturating set");
        out.push_back(AssociatedPrime{e, true, std::move(cert), {}});
    }
    for (VertexSet c : induced_odd_cycles(g)) {
        auto cert = is_2_saturating(induced(covers, c), c);
        if (!cert) throw std::logic_error("induced odd cycle rejected as 2-saturating");
        out.push_back(AssociatedPrime{c, false, std::move(cert), {}});
    }
    std::sort(out.begin(), out.end(),
              [](const AssociatedPrime& a, const AssociatedPrime& b) { return size_lex_less(a.c, b.c); });
    return out;
}

CoverDepthClassification cover_depth_classification(const Graph& g) {
    int n = g.h.n;
    if (g.h.edges.empty()) throw std::invalid_argument("cover_depth_classification: graph has no edges");
    if (n < 4) {
        MonomialIdeal j = edge_ideal(cover_hypergraph(g, true));
        return CoverDepthClassification{depth_class_oracle(ideal_square(j)), "oracle (n < 4)"};
    }
    if (n > 20) throw std::invalid_argument("cover_depth_classification: too many vertices");
    VertexSet full = VertexSet::full(n);
    if (n % 2 == 1 && is_induced_cycle(g, full))
        return CoverDepthClassification{DepthClass::Zero, "spanning odd cycle"};
    std::vector<VertexSet> cycles = induced_odd_cycles(g);
    for (VertexSet c : cycles)
        if (c.count() == n - 1)
            return CoverDepthClassification{DepthClass::One, "induced odd cycle on n-1 vertices"};
    // Degree slices: the slice at mask ha has one facet per edge outside ha
    // (its complement) and one per induced odd cycle inside ha (ditto).
    bool disconnected = false;
    for_each_subset(full, [&](VertexSet ha) {
        if (disconnected) return;
        std::vector<VertexSet> facets;
        for (VertexSet e : g.h.edges)
            if (!e.subset_of(ha)) facets.push_back(full - e);
        for (VertexSet c : cycles)
            if (c.subset_of(ha)) facets.push_back(full - c);
        if (!is_connected(make_complex(n, std::move(facets)))) disconnected = true;
    });
    if (disconnected) return CoverDepthClassification{DepthClass::One, "disconnected degree slice"};
    return CoverDepthClassification{DepthClass::GeTwo, "all degree slices connected"};
}

DepthClass cover_depth_class(const Graph& g) { return cover_depth_classification(g).depth_class; }

CoverDepthLiteralConditions cover_depth_literal_conditions(const Graph& g) {
    int n = g.h.n;
    if (n < 4) throw std::invalid_argument("cover_depth_literal_conditions: needs n >= 4");
    VertexSet full = VertexSet::full(n);
    CoverDepthLiteralConditions out;

    bool two_edges = g.h.edges.size() == 2 && g.h.edges[0].disjoint(g.h.edges[1]) &&
                     (g.h.edges[0] | g.h.edges[1]) == full;
    bool path3 = false;
    if (n == 4 && g.h.edges.size() == 3 && support(g.h) == full) {
        path3 = true;
        for (int v = 0; v < n; ++v)
            if (g.adj[static_cast<size_t>(v)].count() > 2) path3 = false;
    }
    out.not_two_edges_or_path = !two_edges && !path3;

    std::vector<VertexSet> cycles = induced_odd_cycles(g);
    out.no_odd_cycle_n_minus_1 = true;
    for (VertexSet c : cycles)
        if (c.count() == n - 1) out.no_odd_cycle_n_minus_1 = false;

    out.not_cycle_plus_edge = true;
    for (VertexSet c : cycles) {
        if (c.count() != n - 2) continue;
        VertexSet rest = full - c;
        if (!has_edge(g.h, rest)) continue;
        bool clean = true;
        for (VertexSet e : g.h.edges)
            if (!e.subset_of(c) && e != rest) clean = false;
        if (clean) out.not_cycle_plus_edge = false;
    }

    out.no_covering_cycle_pair = true;
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j)
            if ((cycles[i] | cycles[j]) == full) out.no_covering_cycle_pair = false;

    out.not_odd_cycle = !(n % 2 == 1 && is_induced_cycle(g, full));
    return out;
}

bool is_complete_intersection(const MonomialIdeal& j) {
    for (size_t a = 0; a < j.gens.size(); ++a)
        for (size_t b = a + 1; b < j.gens.size(); ++b)
            if (j.gens[a].support().intersects(j.gens[b].support())) return false;
    return true;
}

bool s2_equiv_ci(const Graph& g) { return is_complete_intersection(edge_ideal(cover_hypergraph(g, true))); }

CoverIdealReport cover_ideal_report(const Graph& g) {
    CoverIdealReport rep;
    rep.graph = g;
    rep.ass_primes = cover_ass_primes(g);
    CoverDepthClassification cls = cover_depth_classification(g);
    rep.depth_class = cls.depth_class;
    rep.depth_rule = cls.rule;
    rep.ci = s2_equiv_ci(g);
    if (rep.ci)
        rep.cm_note = "Cohen-Macaulay, depth = dim = " + std::to_string(g.h.n - 2);
    return rep;
}

}  // namespace powerdepth
