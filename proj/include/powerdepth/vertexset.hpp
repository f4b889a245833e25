#pragma once
// Dense vertex sets over at most 64 vertices, stored as bit masks.
// Vertices are 0-based internally; all formatting is 1-based to match input files.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace powerdepth {

struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t(1) << v); }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1));
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }

    constexpr VertexSet with(int v) const { return VertexSet(bits | (std::uint64_t(1) << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits & ~(std::uint64_t(1) << v)); }

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
    constexpr bool disjoint(VertexSet o) const { return (bits & o.bits) == 0; }

    // lowest member; only valid on non-empty sets
    int lowest() const { return std::countr_zero(bits); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
};

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    std::uint64_t b = s.bits;
    while (b) {
        fn(std::countr_zero(b));
        b &= b - 1;
    }
}

// All subsets of mask in increasing numeric order, starting with the empty set.
template <typename Fn>
void for_each_subset(VertexSet mask, Fn&& fn) {
    std::uint64_t s = 0;
    while (true) {
        fn(VertexSet(s));
        s = (s - mask.bits) & mask.bits;
        if (s == 0) break;
    }
}

// Subsets of mask with exactly k members, increasing numeric order.
std::vector<VertexSet> subsets_of_size(VertexSet mask, int k);

std::vector<int> to_indices(VertexSet s);

// 1-based display form, e.g. "{1,3,4}"; empty set prints "{}"
std::string format_vertex_set(VertexSet s);

// Listing order used throughout: fewer members first, then numeric.
inline bool size_lex_less(VertexSet a, VertexSet b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
}

}  // namespace powerdepth
