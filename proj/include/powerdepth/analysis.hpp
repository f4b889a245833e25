#pragma once
// Front-end plumbing: per-instance analysis reports (text and JSON), the
// cross-check bundles that pit the combinatorial criteria against the
// monomial-ideal oracle, and a small worker pool for corpus sweeps.

#include "powerdepth/assoc.hpp"
#include "powerdepth/coverideal.hpp"
#include "powerdepth/depth.hpp"
#include "powerdepth/generators.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace powerdepth {

enum class IdealKind { Edge, Cover };

struct OracleSection {
    DepthClass depth_class = DepthClass::GeTwo;
    std::vector<VertexSet> ass;
    bool depth_agrees = false;
    bool ass_agrees = false;
};

struct AnalysisReport {
    Hypergraph h;
    IdealKind kind = IdealKind::Edge;
    bool graph_input = false;
    // nullopt = depth positive but the one/two split is out of combinatorial
    // and oracle range (hypergraphs with n > 10 only)
    std::optional<DepthClass> depth_class;
    bool depth_zero = false;
    std::string deciding_rule;
    std::optional<SaturatingCertificate> zero_certificate;
    std::optional<GraphDepthConditions> graph_conditions;  // edge ideal of a graph
    std::optional<bool> skeleton_ok;                       // edge ideals; needed for depth >= 2
    std::vector<AssociatedPrime> ass_primes;
    bool ass_available = false;
    bool symbolic_equal = false;
    std::optional<SpecialTriangle> symbolic_witness;
    std::optional<bool> ci;                // cover ideals
    std::optional<std::string> cm_note;    // cover ideals, when ci
    std::optional<OracleSection> oracle;
    std::vector<std::string> warnings;
};

AnalysisReport analyze(const Hypergraph& h, IdealKind kind, bool with_oracle);

std::string render_text(const AnalysisReport& r);
// Stable schema (schema_version 1); all vertex ids 1-based.
std::string render_json(const AnalysisReport& r);

// Worker count: POWERDEPTH_THREADS when set (clamped to 1..256), otherwise
// the hardware concurrency.
int worker_count();
// Runs fn(0..count-1) on the worker pool; rethrows the first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

struct InstanceChecks {
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
};

// Edge-ideal bundle for one graph: depth class and associated primes against
// the oracle, dual implementations against each other (n <= 5 for the
// exhaustive parts), certificate replay, skeleton implication.
InstanceChecks check_edge_graph(const Graph& g);
// Edge-ideal bundle for a general hypergraph (n <= 10 for oracle parts).
InstanceChecks check_edge_hypergraph(const Hypergraph& h);
// Cover-ideal bundle for one graph.
InstanceChecks check_cover_graph(const Graph& g);

struct CrosscheckSummary {
    long instances = 0;
    long failed_instances = 0;
    long failure_count = 0;
    long warning_count = 0;
    std::vector<std::string> failure_notes;  // capped
    std::vector<std::string> warning_notes;  // capped
    std::string first_counterexample;        // canonical input text of the first failure
};

CrosscheckSummary crosscheck_all_graphs(int n, IdealKind kind);
CrosscheckSummary crosscheck_random(int count, std::uint64_t seed, IdealKind kind);

std::string render_summary(const CrosscheckSummary& s);

}  // namespace powerdepth
