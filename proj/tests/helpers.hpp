#pragma once
// Tiny builders shared by the test files; vertex ids are 1-based like the
// input format.

#include "powerdepth/hypergraph.hpp"

#include <initializer_list>
#include <vector>

namespace powerdepth::testing {

inline VertexSet vs(std::initializer_list<int> xs) {
    VertexSet s;
    for (int x : xs) s = s.with(x - 1);
    return s;
}

inline Hypergraph hg(int n, std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<VertexSet> es;
    for (const auto& e : edges) es.push_back(vs(e));
    return make_hypergraph(n, std::move(es));
}

inline Graph gr(int n, std::initializer_list<std::initializer_list<int>> edges) {
    return as_graph(hg(n, edges));
}

}  // namespace powerdepth::testing
