#include "powerdepth/vertexset.hpp"

namespace powerdepth {

std::vector<VertexSet> subsets_of_size(VertexSet mask, int k) {
    std::vector<VertexSet> out;
    if (k < 0) return out;
    std::vector<int> pos = to_indices(mask);
    int m = static_cast<int>(pos.size());
    if (k > m) return out;
    if (k == 0) {
        out.push_back(VertexSet{});
        return out;
    }
    // Gosper's hack over the compressed index range; expanding through the
    // sorted position table preserves numeric order.
    std::uint64_t sub = (std::uint64_t(1) << k) - 1;
    std::uint64_t limit = (m >= 64) ? 0 : (std::uint64_t(1) << m);
    while (m >= 64 || sub < limit) {
        std::uint64_t expanded = 0;
        std::uint64_t s = sub;
        while (s) {
            int j = std::countr_zero(s);
            expanded |= std::uint64_t(1) << pos[j];
            s &= s - 1;
        }
        out.push_back(VertexSet(expanded));
        std::uint64_t c = sub & (~sub + 1);
        std::uint64_t r = sub + c;
        if (r == 0) break;
        sub = (((r ^ sub) >> 2) / c) | r;
    }
    return out;
}

std::vector<int> to_indices(VertexSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

std::string format_vertex_set(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    });
    out += "}";
    return out;
}

}  // namespace powerdepth
