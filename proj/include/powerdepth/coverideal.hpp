#pragma once
// Cover ideals of graphs: the edge ideal of the hypergraph of vertex covers.
// Associated primes of the square are the edges plus the induced odd cycles;
// the depth class comes from degree-slice connectivity.

#include "powerdepth/assoc.hpp"
#include "powerdepth/depthclass.hpp"
#include "powerdepth/hypergraph.hpp"
#include "powerdepth/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace powerdepth {

// Hypergraph whose edges are the (minimal) vertex covers of g. Both variants
// generate the same ideal; the minimal one is the default everywhere.
Hypergraph cover_hypergraph(const Graph& g, bool minimal_only = true);

enum class CoverSaturatingKind { None, EdgeCover, OddCycleCover };

struct CoverSaturatingSets {
    CoverSaturatingKind kind = CoverSaturatingKind::None;
    std::vector<VertexSet> sets;
};

// The complete list of 2-saturating sets of the cover hypergraph restricted
// to c: the empty set and both singletons when c is an edge of g, c itself
// when c is an induced odd cycle, nothing otherwise.
CoverSaturatingSets cover_saturating_sets(const Graph& g, VertexSet c);

// Edges of g (minimal) plus induced odd cycles (embedded), each with a
// certificate replayable against the restricted cover hypergraph.
std::vector<AssociatedPrime> cover_ass_primes(const Graph& g);

struct CoverDepthClassification {
    DepthClass depth_class = DepthClass::GeTwo;
    std::string rule;  // which detector decided
};

// Exact class of depth R/J^2 capped at two. For n >= 4: ZERO iff g is a
// spanning odd cycle; ONE iff some vertex deletion leaves an odd cycle or
// some degree slice of the square is disconnected; GE_TWO otherwise.
// For n <= 3 the answer is delegated to the oracle (rule says so).
CoverDepthClassification cover_depth_classification(const Graph& g);
DepthClass cover_depth_class(const Graph& g);

// The five literal conditions of the depth > 1 characterization, advisory
// only: condition (d) as stated flags graphs (complete graphs on five or
// more vertices, for one) whose slices are in fact all connected, so the
// conjunction can disagree with cover_depth_class. Requires n >= 4.
struct CoverDepthLiteralConditions {
    bool not_two_edges_or_path = false;   // (a) g is not 2K_2 and not a 4-vertex path
    bool no_odd_cycle_n_minus_1 = false;  // (b)
    bool not_cycle_plus_edge = false;     // (c) not an odd (n-2)-cycle plus a far edge
    bool no_covering_cycle_pair = false;  // (d) no two induced odd cycles covering V
    bool not_odd_cycle = false;           // (e)
};

CoverDepthLiteralConditions cover_depth_literal_conditions(const Graph& g);

// Minimal generators with pairwise disjoint supports.
bool is_complete_intersection(const MonomialIdeal& j);

// R/J^2 satisfies Serre's (S2) exactly when the cover ideal is a complete
// intersection; no independent (S2) computation happens here.
bool s2_equiv_ci(const Graph& g);

struct CoverIdealReport {
    Graph graph;
    std::vector<AssociatedPrime> ass_primes;
    DepthClass depth_class = DepthClass::GeTwo;
    std::string depth_rule;
    bool ci = false;
    std::optional<std::string> cm_note;  // set when ci holds
};

CoverIdealReport cover_ideal_report(const Graph& g);

}  // namespace powerdepth
