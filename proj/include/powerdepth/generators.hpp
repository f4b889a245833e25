#pragma once
// Instance generators: named families, seeded random instances, and the
// exhaustive covered-graph corpus used by the cross-check sweeps.

#include "powerdepth/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace powerdepth {

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform for a given seed.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

Graph gen_cycle(int k);                         // C_k, k >= 3
Graph gen_path(int k);                          // path on k vertices, k >= 2
Graph gen_complete(int k);                      // K_k, k >= 2
Graph gen_complete_bipartite(int m, int p);     // K_{m,p}; left side 1..m
// Triangle on {1,2,3} with a path 3-4-5-... of `tail` extra vertices.
Graph gen_triangle_path(int tail);
// Triangle on {1,2,3} with edges {3,4}, {4,5}, {4,6}.
Graph gen_triangle_with_star();
// Two triangles sharing vertex 3.
Graph gen_bowtie();
// Triangle on {1,2,3} plus the far edge {4,5}.
Graph gen_triangle_plus_edge();

// All k-subsets of [n] as edges.
Hypergraph gen_all_k_subsets(int n, int k);

// Three 3-uniform loosely intersecting hypergraphs on [5] (variant 1..3);
// each loses the property when any single edge is removed.
Hypergraph gen_loose_family(int variant);

// Random graph with every vertex covered (each pair flipped fairly; redrawn
// until covered). n >= 2.
Graph random_graph(int n, SplitMix64& rng);

// Random covered hypergraph with inclusion-free edges of size 1..3 (redrawn
// until covered). n >= 2.
Hypergraph random_hypergraph(int n, SplitMix64& rng);

// Every labeled graph on [n] with all vertices covered, ascending by edge
// bitmask. n <= 6.
std::vector<Graph> all_covered_graphs(int n);

}  // namespace powerdepth
