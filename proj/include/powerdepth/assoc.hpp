#pragma once
// Associated primes of I^2 for an edge ideal, with replayable certificates,
// and the test for I^(2) = I^2.
//
// P_C is associated to I^2 exactly when C covers the hypergraph and the
// restriction to C admits a 2-saturating set. Minimal covers always qualify
// (the empty set is 2-saturating there); embedded primes carry larger sets.

#include "powerdepth/hypergraph.hpp"
#include "powerdepth/saturating.hpp"

#include <optional>
#include <vector>

namespace powerdepth {

struct AssociatedPrime {
    VertexSet c;
    bool minimal = false;
    std::optional<SaturatingCertificate> certificate;
    std::vector<VertexSet> origin_triangles;  // graph route only; every triangle that yields c
};

// Baseline: scans every cover C and searches the restriction to C for a
// 2-saturating set. Output ordered by (size, numeric).
std::vector<AssociatedPrime> ass_primes_general(const Hypergraph& h);

// Guided enumeration: C is associated iff C is minimal in some family
// { D cover : U subset of D, section of the restriction to D loosely
// intersecting on U }. Certificates are re-derived per member. Slower than
// the baseline but exercises the cover-family characterization.
std::vector<AssociatedPrime> ass_primes_loose_guided(const Hypergraph& h);

// Graphs: minimal covers plus, per triangle t, the covers that are minimal
// among those containing N(t). All origin triangles of a cover are recorded.
std::vector<AssociatedPrime> ass_primes_graph(const Graph& g);

struct SymbolicSquareResult {
    bool equal = true;
    std::optional<SpecialTriangle> witness;  // a violating triangle when not equal
};

// I^(2) = I^2 iff for every special triangle the union of its edges, clipped
// to the complement D of their common core, is decomposable in the
// restriction to D.
SymbolicSquareResult symbolic_equals_square(const Hypergraph& h);

// Same question through membership of one monomial per special triangle:
// x^(union) * x^(core) lies in I^2 iff some pair of edges F, G (F = G
// allowed) has F | G inside the union and F & G inside the core.
bool symbolic_equals_square_monomial_form(const Hypergraph& h);

}  // namespace powerdepth
