#include "powerdepth/assoc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace powerdepth {

namespace {

bool is_minimal_cover(const Hypergraph& h, VertexSet c) {
    if (!is_cover(h, c)) return false;
    bool minimal = true;
    for_each_vertex(c, [&](int v) {
        if (minimal && is_cover(h, c.without(v))) minimal = false;
    });
    return minimal;
}

void sort_primes(std::vector<AssociatedPrime>& primes) {
    std::sort(primes.begin(), primes.end(),
              [](const AssociatedPrime& a, const AssociatedPrime& b) { return size_lex_less(a.c, b.c); });
}

}  // namespace

std::vector<AssociatedPrime> ass_primes_general(const Hypergraph& h) {
    if (h.n > 22) throw std::invalid_argument("ass_primes_general: too many vertices for exhaustive scan");
    std::vector<AssociatedPrime> out;
    for_each_subset(VertexSet::full(h.n), [&](VertexSet c) {
        if (!is_cover(h, c)) return;
        auto cert = find_2_saturating_set(induced(h, c));
        if (!cert) return;
        out.push_back(AssociatedPrime{c, is_minimal_cover(h, c), std::move(cert), {}});
    });
    sort_primes(out);
    return out;
}

std::vector<AssociatedPrime> ass_primes_loose_guided(const Hypergraph& h) {
    if (h.n > 14) throw std::invalid_argument("ass_primes_loose_guided: too many vertices");
    std::vector<VertexSet> covers;
    for_each_subset(VertexSet::full(h.n), [&](VertexSet c) {
        if (is_cover(h, c)) covers.push_back(c);
    });
    std::vector<VertexSet> found;
    for_each_subset(VertexSet::full(h.n), [&](VertexSet u) {
        std::vector<VertexSet> family;
        for (VertexSet d : covers) {
            if (!u.subset_of(d)) continue;
            Hypergraph hd = induced(h, d);
            if (loosely_intersecting_on(section(hd, u), u)) family.push_back(d);
        }
        for (VertexSet c : family) {
            bool minimal = true;
            for (VertexSet d : family)
                if (d != c && d.subset_of(c)) {
                    minimal = false;
                    break;
                }
            if (minimal) found.push_back(c);
        }
    });
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<AssociatedPrime> out;
    for (VertexSet c : found) {
        auto cert = find_2_saturating_set(induced(h, c));
        if (!cert) throw std::logic_error("cover-family member has no 2-saturating set");
        out.push_back(AssociatedPrime{c, is_minimal_cover(h, c), std::move(cert), {}});
    }
    sort_primes(out);
    return out;
}

std::vector<AssociatedPrime> ass_primes_graph(const Graph& g) {
    const Hypergraph& h = g.h;
    std::vector<AssociatedPrime> out;
    for (VertexSet c : minimal_covers(h)) {
        auto cert = is_2_saturating(induced(h, c), VertexSet{});
        if (!cert) throw std::logic_error("minimal cover rejected the empty 2-saturating set");
        out.push_back(AssociatedPrime{c, true, std::move(cert), {}});
    }
    // For a triangle t inside a cover C, t is 2-saturating in the restriction
    // to C exactly when C is minimal among the covers containing N(t).
    std::map<VertexSet, std::vector<VertexSet>> embedded;
    for (VertexSet t : triangles(g)) {
        VertexSet base = neighborhood(g, t);
        for_each_subset(VertexSet::full(h.n) - base, [&](VertexSet extra) {
            VertexSet c = base | extra;
            if (!is_cover(h, c)) return;
            bool minimal_over_base = true;
            for_each_vertex(extra, [&](int v) {
                if (minimal_over_base && is_cover(h, c.without(v))) minimal_over_base = false;
            });
            if (minimal_over_base) embedded[c].push_back(t);
        });
    }
    for (auto& [c, origins] : embedded) {
        auto cert = is_2_saturating(induced(h, c), origins.front());
        if (!cert) throw std::logic_error("triangle-guided cover rejected its triangle");
        out.push_back(AssociatedPrime{c, false, std::move(cert), origins});
    }
    sort_primes(out);
    return out;
}

SymbolicSquareResult symbolic_equals_square(const Hypergraph& h) {
    for (const SpecialTriangle& t : special_triangles(h, false)) {
        VertexSet core = t.f1 & t.f2 & t.f3;
        VertexSet d = h.verts - core;
        VertexSet u = (t.f1 | t.f2 | t.f3) & d;
        if (!is_decomposable(induced(h, d), u)) return SymbolicSquareResult{false, t};
    }
    return SymbolicSquareResult{true, std::nullopt};
}

bool symbolic_equals_square_monomial_form(const Hypergraph& h) {
    for (const SpecialTriangle& t : special_triangles(h, false)) {
        VertexSet uni = t.f1 | t.f2 | t.f3;
        VertexSet core = t.f1 & t.f2 & t.f3;
        bool inside = false;
        for (size_t i = 0; i < h.edges.size() && !inside; ++i)
            for (size_t j = i; j < h.edges.size(); ++j) {
                if (!(h.edges[i] | h.edges[j]).subset_of(uni)) continue;
                if (!(h.edges[i] & h.edges[j]).subset_of(core)) continue;
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace powerdepth
