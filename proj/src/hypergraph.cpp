#include "powerdepth/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace powerdepth {

namespace {

std::vector<VertexSet> dedup_keep_order(std::vector<VertexSet> edges) {
    std::vector<VertexSet> out;
    for (VertexSet e : edges) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

std::vector<VertexSet> dedup_sorted(std::vector<VertexSet> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

Hypergraph make_hypergraph(int n, std::vector<VertexSet> edges) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in 1..64");
    return Hypergraph{n, VertexSet::full(n), dedup_keep_order(std::move(edges))};
}

Hypergraph make_hypergraph(int n, VertexSet verts, std::vector<VertexSet> edges) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in 1..64");
    return Hypergraph{n, verts, dedup_sorted(std::move(edges))};
}

Hypergraph parse_hypergraph(std::istream& in) {
    int n = -1;
    std::vector<VertexSet> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        if (n < 0) {
            std::string head;
            if (!(ls >> head)) continue;  // blank / comment-only
            long long count = 0;
            if (head != "n" || !(ls >> count))
                throw ParseError("line " + std::to_string(lineno) + ": expected header 'n <count>'");
            if (count < 1 || count > 64)
                throw ParseError("line " + std::to_string(lineno) + ": vertex count must be in 1..64");
            std::string rest;
            if (ls >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after header");
            n = static_cast<int>(count);
            continue;
        }
        VertexSet e;
        bool saw = false;
        long long v = 0;
        while (ls >> v) {
            if (v < 1 || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex id " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
            e = e.with(static_cast<int>(v - 1));
            saw = true;
        }
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) + ": expected whitespace-separated vertex ids");
        if (!saw) continue;  // blank line
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("missing header line 'n <count>'");
    if (edges.empty()) throw ParseError("no edges given");
    Hypergraph h = make_hypergraph(n, std::move(edges));
    VertexSet covered = support(h);
    if (covered != VertexSet::full(n)) {
        VertexSet missing = VertexSet::full(n) - covered;
        throw ParseError("vertex " + std::to_string(missing.lowest() + 1) + " lies in no edge");
    }
    return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& h) {
    std::string out = "n " + std::to_string(h.n) + "\n";
    for (VertexSet e : h.edges) {
        bool first = true;
        for_each_vertex(e, [&](int v) {
            if (!first) out += " ";
            out += std::to_string(v + 1);
            first = false;
        });
        out += "\n";
    }
    return out;
}

bool is_graph(const Hypergraph& h) {
    for (VertexSet e : h.edges)
        if (e.count() != 2) return false;
    return true;
}

VertexSet support(const Hypergraph& h) {
    VertexSet s;
    for (VertexSet e : h.edges) s = s | e;
    return s;
}

bool has_edge(const Hypergraph& h, VertexSet e) {
    return std::find(h.edges.begin(), h.edges.end(), e) != h.edges.end();
}

bool has_empty_edge(const Hypergraph& h) { return has_edge(h, VertexSet{}); }

Hypergraph section(const Hypergraph& h, VertexSet u) {
    std::vector<VertexSet> kept;
    for (VertexSet e : h.edges)
        if (e.subset_of(u)) kept.push_back(e);
    return make_hypergraph(h.n, h.verts, std::move(kept));
}

Hypergraph induced(const Hypergraph& h, VertexSet c) {
    std::vector<VertexSet> cut;
    cut.reserve(h.edges.size());
    for (VertexSet e : h.edges) cut.push_back(e & c);
    return make_hypergraph(h.n, h.verts & c, std::move(cut));
}

Hypergraph link(const Hypergraph& h, int i) {
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges)
        if (e.contains(i)) out.push_back(e.without(i));
    return make_hypergraph(h.n, h.verts, std::move(out));
}

Hypergraph contract(const Hypergraph& h, int i) {
    std::vector<VertexSet> out;
    out.reserve(h.edges.size());
    for (VertexSet e : h.edges) out.push_back(e.without(i));
    return make_hypergraph(h.n, h.verts, std::move(out));
}

bool is_cover(const Hypergraph& h, VertexSet c) {
    for (VertexSet e : h.edges)
        if (!e.intersects(c)) return false;
    return true;
}

std::vector<VertexSet> minimal_covers(const Hypergraph& h) {
    // A minimal cover never uses a vertex outside the support.
    VertexSet supp = support(h);
    if (supp.count() > 28)
        throw std::invalid_argument("minimal_covers: support too large for exhaustive scan");
    std::vector<VertexSet> out;
    for_each_subset(supp, [&](VertexSet c) {
        if (!is_cover(h, c)) return;
        bool minimal = true;
        for_each_vertex(c, [&](int v) {
            if (minimal && is_cover(h, c.without(v))) minimal = false;
        });
        if (minimal) out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

Graph as_graph(const Hypergraph& h) {
    if (!is_graph(h)) throw std::invalid_argument("hypergraph has a non-pair edge");
    Graph g{h, std::vector<VertexSet>(static_cast<size_t>(h.n))};
    for (VertexSet e : h.edges) {
        int u = e.lowest();
        int v = e.without(u).lowest();
        g.adj[u] = g.adj[u].with(v);
        g.adj[v] = g.adj[v].with(u);
    }
    return g;
}

bool adjacent(const Graph& g, int u, int v) { return g.adj[u].contains(v); }

VertexSet neighborhood(const Graph& g, VertexSet u) {
    VertexSet out;
    for_each_vertex(u, [&](int v) { out = out | g.adj[v]; });
    return out;
}

std::vector<VertexSet> triangles(const Graph& g) {
    std::vector<VertexSet> out;
    int n = g.h.n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adjacent(g, a, b)) continue;
            VertexSet common = g.adj[a] & g.adj[b];
            for_each_vertex(common, [&](int c) {
                if (c > b) out.push_back(VertexSet::single(a) | VertexSet::single(b) | VertexSet::single(c));
            });
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_induced_cycle(const Graph& g, VertexSet c) {
    int k = c.count();
    if (k < 3) return false;
    // 2-regular within c and connected <=> a single cycle.
    bool regular = true;
    for_each_vertex(c, [&](int v) {
        if ((g.adj[v] & c).count() != 2) regular = false;
    });
    if (!regular) return false;
    VertexSet seen = VertexSet::single(c.lowest());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for_each_vertex(frontier, [&](int v) { next = next | (g.adj[v] & c); });
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == c;
}

std::vector<VertexSet> induced_odd_cycles(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_subset(VertexSet::full(g.h.n), [&](VertexSet c) {
        if (c.count() % 2 == 1 && is_induced_cycle(g, c)) out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

Graph complement_graph(const Graph& g) {
    std::vector<VertexSet> edges;
    int n = g.h.n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adjacent(g, u, v)) edges.push_back(VertexSet::single(u) | VertexSet::single(v));
    Graph out{Hypergraph{n, g.h.verts, std::move(edges)}, std::vector<VertexSet>(static_cast<size_t>(n))};
    for (VertexSet e : out.h.edges) {
        int u = e.lowest();
        int v = e.without(u).lowest();
        out.adj[u] = out.adj[u].with(v);
        out.adj[v] = out.adj[v].with(u);
    }
    return out;
}

int graph_diameter(const Graph& g, VertexSet s) {
    if (s.count() <= 1) return 0;
    int best = 0;
    bool infinite = false;
    for_each_vertex(s, [&](int src) {
        if (infinite) return;
        // BFS by mask layers
        VertexSet seen = VertexSet::single(src);
        VertexSet frontier = seen;
        int dist = 0;
        while (seen != s && !frontier.empty()) {
            VertexSet next;
            for_each_vertex(frontier, [&](int v) { next = next | (g.adj[v] & s); });
            frontier = next - seen;
            seen = seen | frontier;
            if (!frontier.empty()) ++dist;
        }
        if (seen != s) {
            infinite = true;
            return;
        }
        best = std::max(best, dist);
    });
    return infinite ? kInfiniteDiameter : best;
}

int graph_diameter(const Graph& g) { return graph_diameter(g, VertexSet::full(g.h.n)); }

std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g) {
    int n = g.h.n;
    std::vector<int> color(static_cast<size_t>(n), -1);
    VertexSet left, right;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        left = left.with(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool ok = true;
            for_each_vertex(g.adj[v], [&](int w) {
                if (!ok) return;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    if (color[w] == 0)
                        left = left.with(w);
                    else
                        right = right.with(w);
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return std::make_pair(left, right);
}

}  // namespace powerdepth
