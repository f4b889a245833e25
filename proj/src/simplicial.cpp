#include "powerdepth/simplicial.hpp"

#include <algorithm>
#include <numeric>

namespace powerdepth {

SimplicialComplex make_complex(int n, std::vector<VertexSet> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> maximal;
    for (VertexSet f : faces) {
        bool dominated = false;
        for (VertexSet g : faces) {
            if (f != g && f.subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(f);
    }
    return SimplicialComplex{n, std::move(maximal)};
}

bool is_void(const SimplicialComplex& k) { return k.facets.empty(); }

VertexSet complex_vertices(const SimplicialComplex& k) {
    VertexSet s;
    for (VertexSet f : k.facets) s = s | f;
    return s;
}

bool is_face(const SimplicialComplex& k, VertexSet f) {
    for (VertexSet g : k.facets)
        if (f.subset_of(g)) return true;
    return false;
}

bool is_connected(const SimplicialComplex& k) {
    if (k.facets.size() <= 1) return true;
    // Union facets that share a vertex; connected <=> one class.
    size_t m = k.facets.size();
    std::vector<size_t> parent(m);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (k.facets[i].intersects(k.facets[j])) parent[find(i)] = find(j);
    size_t root = find(0);
    for (size_t i = 1; i < m; ++i)
        if (find(i) != root) return false;
    return true;
}

Graph one_skeleton(const SimplicialComplex& k) {
    std::vector<VertexSet> edges;
    int n = k.n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet pair = VertexSet::single(u) | VertexSet::single(v);
            if (is_face(k, pair)) edges.push_back(pair);
        }
    Graph g{Hypergraph{n, complex_vertices(k), std::move(edges)}, std::vector<VertexSet>(static_cast<size_t>(n))};
    for (VertexSet e : g.h.edges) {
        int u = e.lowest();
        int v = e.without(u).lowest();
        g.adj[u] = g.adj[u].with(v);
        g.adj[v] = g.adj[v].with(u);
    }
    return g;
}

bool skeleton_diameter_le(const SimplicialComplex& k, int d) {
    VertexSet verts = complex_vertices(k);
    if (verts.count() <= 1) return true;
    Graph sk = one_skeleton(k);
    int diam = graph_diameter(sk, verts);
    return diam != kInfiniteDiameter && diam <= d;
}

SimplicialComplex independence_complex(const Hypergraph& h) {
    // Maximal edge-free sets are exactly the complements of minimal covers.
    std::vector<VertexSet> facets;
    for (VertexSet c : minimal_covers(h)) facets.push_back(VertexSet::full(h.n) - c);
    // No cover exists only if some edge is empty; then nothing is a face.
    if (facets.empty() && !has_empty_edge(h)) facets.push_back(VertexSet::full(h.n));
    return make_complex(h.n, std::move(facets));
}

}  // namespace powerdepth
