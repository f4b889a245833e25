#include "powerdepth/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace powerdepth {

namespace {

VertexSet pair_set(int u, int v) { return VertexSet::single(u) | VertexSet::single(v); }

Graph graph_from_pairs(int n, std::vector<VertexSet> edges) {
    return as_graph(make_hypergraph(n, std::move(edges)));
}

}  // namespace

Graph gen_cycle(int k) {
    if (k < 3) throw std::invalid_argument("gen_cycle: need k >= 3");
    std::vector<VertexSet> edges;
    for (int i = 0; i < k; ++i) edges.push_back(pair_set(i, (i + 1) % k));
    return graph_from_pairs(k, std::move(edges));
}

Graph gen_path(int k) {
    if (k < 2) throw std::invalid_argument("gen_path: need k >= 2");
    std::vector<VertexSet> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back(pair_set(i, i + 1));
    return graph_from_pairs(k, std::move(edges));
}

Graph gen_complete(int k) {
    if (k < 2) throw std::invalid_argument("gen_complete: need k >= 2");
    std::vector<VertexSet> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back(pair_set(i, j));
    return graph_from_pairs(k, std::move(edges));
}

Graph gen_complete_bipartite(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("gen_complete_bipartite: need both sides nonempty");
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < p; ++j) edges.push_back(pair_set(i, m + j));
    return graph_from_pairs(m + p, std::move(edges));
}

Graph gen_triangle_path(int tail) {
    if (tail < 0) throw std::invalid_argument("gen_triangle_path: tail must be nonnegative");
    std::vector<VertexSet> edges{pair_set(0, 1), pair_set(0, 2), pair_set(1, 2)};
    for (int i = 0; i < tail; ++i) edges.push_back(pair_set(2 + i, 3 + i));
    return graph_from_pairs(3 + tail, std::move(edges));
}

Graph gen_triangle_with_star() {
    return graph_from_pairs(
        6, {pair_set(0, 1), pair_set(0, 2), pair_set(1, 2), pair_set(2, 3), pair_set(3, 4), pair_set(3, 5)});
}

Graph gen_bowtie() {
    return graph_from_pairs(
        5, {pair_set(0, 1), pair_set(0, 2), pair_set(1, 2), pair_set(2, 3), pair_set(2, 4), pair_set(3, 4)});
}

Graph gen_triangle_plus_edge() {
    return graph_from_pairs(5, {pair_set(0, 1), pair_set(0, 2), pair_set(1, 2), pair_set(3, 4)});
}

Hypergraph gen_all_k_subsets(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("gen_all_k_subsets: need 1 <= k <= n");
    return make_hypergraph(n, subsets_of_size(VertexSet::full(n), k));
}

Hypergraph gen_loose_family(int variant) {
    auto t = [](int a, int b, int c) {
        return VertexSet::single(a - 1) | VertexSet::single(b - 1) | VertexSet::single(c - 1);
    };
    switch (variant) {
        case 1:
            return make_hypergraph(5, {t(1, 2, 3), t(2, 3, 4), t(3, 4, 5), t(1, 4, 5), t(1, 2, 5)});
        case 2:
            return make_hypergraph(5, {t(1, 2, 3), t(1, 3, 5), t(1, 4, 5), t(2, 3, 4), t(2, 4, 5)});
        case 3:
            return make_hypergraph(5, {t(1, 2, 3), t(1, 4, 5), t(2, 3, 4), t(2, 3, 5), t(2, 4, 5), t(3, 4, 5)});
        default:
            throw std::invalid_argument("gen_loose_family: variant must be 1, 2 or 3");
    }
}

Graph random_graph(int n, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("random_graph: need n >= 2");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<VertexSet> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next() & 1u) edges.push_back(pair_set(i, j));
        Hypergraph h = make_hypergraph(n, std::move(edges));
        if (!h.edges.empty() && support(h) == VertexSet::full(n)) return as_graph(h);
    }
    throw std::runtime_error("random_graph: no covered draw");
}

Hypergraph random_hypergraph(int n, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("random_hypergraph: need n >= 2");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int count = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
        std::vector<VertexSet> edges;
        for (int e = 0; e < count; ++e) {
            int size = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(3, static_cast<std::uint64_t>(n))));
            VertexSet edge;
            while (edge.count() < size) edge = edge.with(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            edges.push_back(edge);
        }
        // keep only inclusion-minimal edges so exponent patterns stay uniform
        std::vector<VertexSet> minimal;
        for (VertexSet e : edges) {
            bool keep = true;
            for (VertexSet f : edges)
                if (f != e && f.subset_of(e)) keep = false;
            if (keep && std::find(minimal.begin(), minimal.end(), e) == minimal.end()) minimal.push_back(e);
        }
        Hypergraph h = make_hypergraph(n, std::move(minimal));
        if (support(h) == VertexSet::full(n)) return h;
    }
    throw std::runtime_error("random_hypergraph: no covered draw");
}

std::vector<Graph> all_covered_graphs(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("all_covered_graphs: supported for 2 <= n <= 6");
    std::vector<VertexSet> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back(pair_set(i, j));
    std::vector<Graph> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        std::vector<VertexSet> edges;
        for (size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p) & 1u) edges.push_back(pairs[p]);
        Hypergraph h = make_hypergraph(n, std::move(edges));
        if (support(h) == VertexSet::full(n)) out.push_back(as_graph(h));
    }
    return out;
}

}  // namespace powerdepth
