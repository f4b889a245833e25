#pragma once
// Hypergraphs and graphs on at most 64 vertices, edges stored as vertex masks.

#include "powerdepth/vertexset.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powerdepth {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Hypergraph {
    int n = 0;                    // ambient variables 0..n-1
    VertexSet verts;              // the hypergraph's own vertex set; full(n) for parsed inputs.
                                  // Restrictions live on a smaller vertex set, and the
                                  // per-vertex quantifiers below range over verts, not [n].
    std::vector<VertexSet> edges; // deduplicated; derived objects may contain the empty edge
};

// Input order is preserved (minus duplicates); verts = full(n).
Hypergraph make_hypergraph(int n, std::vector<VertexSet> edges);
// Derived objects: edges are sorted ascending for deterministic traversal.
Hypergraph make_hypergraph(int n, VertexSet verts, std::vector<VertexSet> edges);

// Text format: "n <count>" first, then one edge per line as 1-based ids.
// '#' starts a comment; blank lines are skipped. Rejects n outside 1..64,
// ids outside 1..n, and vertices that lie in no edge.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph& h);

bool is_graph(const Hypergraph& h);      // every edge has exactly two vertices
VertexSet support(const Hypergraph& h);  // union of all edges
bool has_edge(const Hypergraph& h, VertexSet e);
bool has_empty_edge(const Hypergraph& h);

// Edges fully contained in u; vertex set unchanged.
Hypergraph section(const Hypergraph& h, VertexSet u);
// Restriction to c: edges { F & c }, on vertex set verts & c.
Hypergraph induced(const Hypergraph& h, VertexSet c);
// Link of i: { F \ i : F edge, i in F }.
Hypergraph link(const Hypergraph& h, int i);
// Deletion-contraction H(i): { F \ i : F edge }.
Hypergraph contract(const Hypergraph& h, int i);

bool is_cover(const Hypergraph& h, VertexSet c);  // meets every edge
// All inclusion-minimal covers, ascending as bit patterns. Exhaustive scan
// over subsets of the support; intended for small n.
std::vector<VertexSet> minimal_covers(const Hypergraph& h);

struct Graph {
    Hypergraph h;
    std::vector<VertexSet> adj;  // adj[v] = neighbors of v
};

Graph as_graph(const Hypergraph& h);  // throws std::invalid_argument unless all edges are pairs
bool adjacent(const Graph& g, int u, int v);
VertexSet neighborhood(const Graph& g, VertexSet u);  // N(U): union of the members' neighbor sets
std::vector<VertexSet> triangles(const Graph& g);     // increasing numeric order
bool is_induced_cycle(const Graph& g, VertexSet c);   // induced subgraph on c is a single cycle
std::vector<VertexSet> induced_odd_cycles(const Graph& g);  // odd length >= 3, ascending masks
Graph complement_graph(const Graph& g);               // non-edges among [n]

inline constexpr int kInfiniteDiameter = -1;
// Diameter of the induced subgraph on s; kInfiniteDiameter when some pair is
// unreachable, 0 when s has at most one vertex.
int graph_diameter(const Graph& g, VertexSet s);
int graph_diameter(const Graph& g);

// Two-coloring of all n vertices (isolated ones go to the first side);
// nullopt when an odd closed walk exists.
std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g);

}  // namespace powerdepth
