#include "powerdepth/saturating.hpp"

#include <stdexcept>

namespace powerdepth {

std::optional<std::pair<VertexSet, VertexSet>> find_decomposition(const Hypergraph& h, VertexSet u) {
    if (has_empty_edge(h)) return std::make_pair(VertexSet{}, VertexSet{});
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (!h.edges[i].subset_of(u)) continue;
        for (size_t j = i + 1; j < h.edges.size(); ++j) {
            if (!h.edges[j].subset_of(u)) continue;
            if (h.edges[i].disjoint(h.edges[j])) return std::make_pair(h.edges[i], h.edges[j]);
        }
    }
    return std::nullopt;
}

bool is_decomposable(const Hypergraph& h, VertexSet u) { return find_decomposition(h, u).has_value(); }

bool is_intersecting(const Hypergraph& h) {
    if (has_empty_edge(h)) return false;
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (size_t j = i + 1; j < h.edges.size(); ++j)
            if (h.edges[i].disjoint(h.edges[j])) return false;
    return true;
}

bool is_loosely_intersecting(const Hypergraph& h) {
    if (!is_intersecting(h)) return false;
    bool loose = true;
    for_each_vertex(support(h), [&](int v) {
        if (loose && is_intersecting(link(h, v))) loose = false;
    });
    return loose;
}

bool loosely_intersecting_on(const Hypergraph& section_h, VertexSet u) {
    if (!is_intersecting(section_h)) return false;
    bool loose = true;
    for_each_vertex(u, [&](int v) {
        // A member of u meeting no section edge has an empty link, which is
        // intersecting, so it fails here.
        if (loose && is_intersecting(link(section_h, v))) loose = false;
    });
    return loose;
}

namespace {

SaturatingCertificate::Kind classify(const Hypergraph& h, VertexSet u) {
    if (u.count() <= 1) return SaturatingCertificate::Kind::EmptyOrVertex;
    if (is_graph(h) && u.count() == 3) return SaturatingCertificate::Kind::DominatingTriangle;
    return SaturatingCertificate::Kind::General;
}

}  // namespace

std::optional<SaturatingCertificate> is_2_saturating(const Hypergraph& h, VertexSet u) {
    if (!u.subset_of(h.verts)) throw std::invalid_argument("is_2_saturating: u must lie in the vertex set");
    if (is_decomposable(h, u)) return std::nullopt;
    SaturatingCertificate cert{u, classify(h, u), {}};
    bool ok = true;
    for_each_vertex(h.verts, [&](int i) {
        if (!ok) return;
        auto dec = find_decomposition(contract(h, i), u.without(i));
        if (!dec) {
            ok = false;
            return;
        }
        cert.witnesses.push_back(VertexWitness{i, dec->first, dec->second});
    });
    if (!ok) return std::nullopt;
    return cert;
}

bool is_2_saturating_sections(const Hypergraph& h, VertexSet u) {
    if (!u.subset_of(h.verts)) throw std::invalid_argument("is_2_saturating_sections: u must lie in the vertex set");
    Hypergraph sec = section(h, u);
    if (!loosely_intersecting_on(sec, u)) return false;
    bool ok = true;
    for_each_vertex(h.verts - u, [&](int i) {
        if (!ok) return;
        if (has_edge(h, VertexSet::single(i))) return;  // isolated vertex, nothing to check
        std::vector<VertexSet> lk;
        for (VertexSet e : h.edges)
            if (e.contains(i) && e.without(i).subset_of(u)) lk.push_back(e.without(i));
        bool found = false;
        for (size_t a = 0; a < lk.size() && !found; ++a)
            for (size_t b = a + 1; b < lk.size() && !found; ++b)
                if (lk[a].disjoint(lk[b])) found = true;
        for (size_t a = 0; a < lk.size() && !found; ++a)
            for (VertexSet s : sec.edges)
                if (lk[a].disjoint(s)) {
                    found = true;
                    break;
                }
        if (!found) ok = false;
    });
    return ok;
}

bool verify_certificate(const Hypergraph& h, const SaturatingCertificate& cert) {
    if (!cert.u.subset_of(h.verts)) return false;
    if (cert.kind != classify(h, cert.u)) return false;
    if (is_decomposable(h, cert.u)) return false;
    if (cert.witnesses.size() != static_cast<size_t>(h.verts.count())) return false;
    size_t idx = 0;
    bool ok = true;
    for_each_vertex(h.verts, [&](int i) {
        if (!ok) return;
        const VertexWitness& w = cert.witnesses[idx++];
        if (w.vertex != i) {
            ok = false;
            return;
        }
        Hypergraph hc = contract(h, i);
        if (!has_edge(hc, w.f) || !has_edge(hc, w.g) || !w.f.disjoint(w.g) ||
            !(w.f | w.g).subset_of(cert.u.without(i)))
            ok = false;
    });
    return ok;
}

std::optional<SaturatingCertificate> find_2_saturating_set(const Hypergraph& h) {
    if (is_graph(h) && !h.edges.empty()) {
        Graph g = as_graph(h);
        for (VertexSet t : triangles(g)) {
            if (!h.verts.subset_of(neighborhood(g, t))) continue;
            auto cert = is_2_saturating(h, t);
            if (!cert) throw std::logic_error("dominating triangle not accepted by the definition");
            return cert;
        }
        return std::nullopt;
    }
    if (h.verts.count() > 22)
        throw std::invalid_argument("find_2_saturating_set: vertex set too large for exhaustive scan");
    for (int size = 0; size <= h.verts.count(); ++size) {
        for (VertexSet u : subsets_of_size(h.verts, size)) {
            if (!is_2_saturating_sections(h, u)) continue;
            auto cert = is_2_saturating(h, u);
            if (!cert) throw std::logic_error("section characterization disagrees with the definition");
            return cert;
        }
    }
    return std::nullopt;
}

std::vector<SpecialTriangle> special_triangles(const Hypergraph& h, bool require_empty_intersection) {
    std::vector<SpecialTriangle> out;
    size_t m = h.edges.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                VertexSet f1 = h.edges[i], f2 = h.edges[j], f3 = h.edges[k];
                VertexSet w12 = (f1 & f2) - f3;
                VertexSet w23 = (f2 & f3) - f1;
                VertexSet w13 = (f1 & f3) - f2;
                if (w12.empty() || w23.empty() || w13.empty()) continue;
                bool empty_core = (f1 & f2 & f3).empty();
                if (require_empty_intersection && !empty_core) continue;
                out.push_back(SpecialTriangle{f1, f2, f3, w12.lowest(), w23.lowest(), w13.lowest(), empty_core});
            }
    return out;
}

std::optional<VertexSet> has_dominating_triangle(const Graph& g) {
    for (VertexSet t : triangles(g))
        if (g.h.verts.subset_of(neighborhood(g, t))) return t;
    return std::nullopt;
}

DepthPositiveResult depth_positive_second_power(const Hypergraph& h) {
    auto cert = find_2_saturating_set(h);
    if (cert) return DepthPositiveResult{false, std::move(cert)};
    return DepthPositiveResult{true, std::nullopt};
}

}  // namespace powerdepth
