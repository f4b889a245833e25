// Acceptance gate: eleven end-to-end checks against pinned expected values,
// one PASS/FAIL line each, nonzero exit when any line fails. Two of the
// pinned regression values (criteria 3 and 5) disagree with what both the
// combinatorial criteria and the independent monomial-ideal oracle compute;
// those lines report the computed truth in their detail output and fail
// rather than bending either implementation toward the pinned value.

#include "powerdepth/analysis.hpp"
#include "powerdepth/coverideal.hpp"
#include "powerdepth/generators.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace powerdepth;

namespace {

using Detail = std::vector<std::string>;

std::vector<VertexSet> supports(const std::vector<AssociatedPrime>& primes) {
    std::vector<VertexSet> out;
    for (const auto& p : primes) out.push_back(p.c);
    return out;
}

std::vector<VertexSet> embedded_supports(const std::vector<AssociatedPrime>& primes) {
    std::vector<VertexSet> out;
    for (const auto& p : primes)
        if (!p.minimal) out.push_back(p.c);
    return out;
}

// supports plus minimal flags; certificates may legitimately differ per route
bool same_primes(const std::vector<AssociatedPrime>& a, const std::vector<AssociatedPrime>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].c != b[i].c || a[i].minimal != b[i].minimal) return false;
    return true;
}

std::string edges_line(const Hypergraph& h) {
    std::string s = "n=" + std::to_string(h.n) + " edges";
    for (VertexSet e : h.edges) s += " " + format_vertex_set(e);
    return s;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.h.n != b.h.n || a.h.edges.size() != b.h.edges.size()) return false;
    std::vector<VertexSet> target = b.h.edges;
    std::sort(target.begin(), target.end());
    std::vector<int> perm(static_cast<std::size_t>(a.h.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<VertexSet> mapped;
        mapped.reserve(a.h.edges.size());
        for (VertexSet e : a.h.edges) {
            VertexSet m;
            for_each_vertex(e, [&](int v) { m = m.with(perm[static_cast<std::size_t>(v)]); });
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Shared corpora, built once. all: every labeled covered graph, n = 2..6.
const std::vector<Graph>& corpus_graphs(int n) {
    static std::vector<std::vector<Graph>> cache(7);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (slot.empty()) slot = all_covered_graphs(n);
    return slot;
}

std::vector<Hypergraph> random_corpus(int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Hypergraph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));
        out.push_back(random_hypergraph(n, rng));
    }
    return out;
}

// First-mismatch recorder for the sweeps.
struct Mismatches {
    std::atomic<long> count{0};
    std::mutex mutex;
    std::string first;

    void record(const std::string& text) {
        if (count.fetch_add(1) == 0) {
            std::lock_guard<std::mutex> lock(mutex);
            first = text;
        }
    }
};

struct CriterionResult {
    bool pass = false;
    double seconds = 0.0;
    Detail detail;
};

int run_criterion(int number, const char* label, double budget_seconds,
                  const std::function<bool(Detail&)>& body) {
    CriterionResult r;
    auto start = std::chrono::steady_clock::now();
    bool ok = body(r.detail);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = budget_seconds <= 0.0 || r.seconds < budget_seconds;
    r.pass = ok && in_budget;
    std::printf("criterion %2d: %s (%.2f s) %s\n", number, r.pass ? "PASS" : "FAIL", r.seconds,
                label);
    if (!in_budget)
        std::printf("    over budget: %.2f s >= %.0f s\n", r.seconds, budget_seconds);
    for (const std::string& line : r.detail) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    return r.pass ? 0 : 1;
}

bool criterion_1(Detail& d) {
    DepthClass tri = depth_class_graph(gen_complete(3)).depth_class;
    DepthClass tail1 = depth_class_graph(gen_triangle_path(1)).depth_class;
    DepthClass tail2 = depth_class_graph(gen_triangle_path(2)).depth_class;
    d.push_back(std::string("triangle ") + to_string(tri) + ", one tail edge " + to_string(tail1) +
                ", two-edge tail " + to_string(tail2));
    return tri == DepthClass::Zero && tail1 == DepthClass::Zero && tail2 != DepthClass::Zero;
}

bool criterion_2(Detail& d) {
    auto emb2 = embedded_supports(ass_primes_graph(gen_triangle_path(2)));
    auto emb3 = embedded_supports(ass_primes_graph(gen_triangle_path(3)));
    auto fmt = [](const std::vector<VertexSet>& xs) {
        std::string s;
        for (VertexSet x : xs) s += (s.empty() ? "" : " ") + format_vertex_set(x);
        return s.empty() ? std::string("none") : s;
    };
    d.push_back("two-edge tail embedded: " + fmt(emb2));
    d.push_back("three-edge tail embedded: " + fmt(emb3));
    VertexSet v1234 = VertexSet().with(0).with(1).with(2).with(3);
    return emb2 == std::vector<VertexSet>{v1234} &&
           emb3 == std::vector<VertexSet>{v1234.with(4), v1234.with(5)};
}

bool criterion_3(Detail& d) {
    Hypergraph h = gen_all_k_subsets(4, 3);
    bool diameter_one = skeleton_diameter_le(independence_complex(h), 1);
    d.push_back(std::string("skeleton diameter <= 1: ") + (diameter_one ? "yes" : "no"));

    DepthPositiveResult pos = depth_positive_second_power(h);
    bool zero_with_full_u =
        pos.certificate && pos.certificate->u == VertexSet::full(4);
    if (!zero_with_full_u) {
        d.push_back("pinned: depth class ZERO with certificate U = {1,2,3,4}");
        d.push_back(std::string("computed: ") +
                    (pos.positive ? "no 2-saturating set exists, depth is positive"
                                  : "a different certificate"));
        d.push_back("{1,2,3,4} is not 2-saturating here: every vertex link in this hypergraph "
                    "is intersecting, and no contraction owns two disjoint edges inside the "
                    "remaining three vertices");
        HypergraphDepthReport rep = hypergraph_depth_report(h);
        if (rep.oracle_class)
            d.push_back(std::string("independent oracle depth class: ") +
                        to_string(*rep.oracle_class) + " (agrees with the combinatorial route)");
    }
    return diameter_one && zero_with_full_u;
}

bool criterion_4(Detail& d) {
    GraphDepthReport one = depth_class_graph(gen_triangle_path(3));
    GraphDepthReport two = depth_class_graph(gen_triangle_with_star());
    auto profile = [](const GraphDepthReport& r) {
        std::string s = to_string(r.depth_class);
        s += r.conditions.no_dominating_triangle ? ", no dominating triangle" : ", dominating triangle";
        s += r.conditions.complement_diameter_ok ? ", complement diameter ok" : ", complement diameter fails";
        s += r.conditions.triangle_neighborhoods_ok ? ", triangle neighborhoods ok"
                                                    : ", triangle neighborhoods fail";
        return s;
    };
    d.push_back("three-edge tail: " + profile(one));
    d.push_back("triangle with star: " + profile(two));
    bool first_ok = one.depth_class == DepthClass::One && one.conditions.no_dominating_triangle &&
                    one.conditions.complement_diameter_ok && !one.conditions.triangle_neighborhoods_ok;
    bool second_ok = two.depth_class == DepthClass::One && two.conditions.no_dominating_triangle &&
                     !two.conditions.complement_diameter_ok && two.conditions.triangle_neighborhoods_ok;
    return first_ok && second_ok;
}

bool criterion_5(Detail& d) {
    struct Named {
        const char* label;
        Graph graph;
        DepthClass cls;
        bool ci;
    };
    std::vector<Named> named;
    named.push_back({"C_5", gen_cycle(5), DepthClass::Zero, false});
    named.push_back({"triangle plus edge", gen_triangle_plus_edge(), DepthClass::One, false});
    named.push_back({"bowtie", gen_bowtie(), DepthClass::One, false});
    named.push_back({"K_{1,3}", gen_complete_bipartite(1, 3), DepthClass::GeTwo, true});
    named.push_back({"K_{2,2}", gen_complete_bipartite(2, 2), DepthClass::GeTwo, true});
    named.push_back({"K_{1,4}", gen_complete_bipartite(1, 4), DepthClass::GeTwo, true});
    named.push_back({"K_{2,3}", gen_complete_bipartite(2, 3), DepthClass::GeTwo, true});

    bool named_ok = true;
    for (const Named& f : named) {
        CoverIdealReport rep = cover_ideal_report(f.graph);
        bool ok = rep.depth_class == f.cls && rep.ci == f.ci && rep.cm_note.has_value() == f.ci;
        if (!ok) {
            named_ok = false;
            d.push_back(std::string("named fixture ") + f.label + ": computed " +
                        to_string(rep.depth_class) + (rep.ci ? " (CI)" : "") + ", pinned " +
                        to_string(f.cls) + (f.ci ? " (CI)" : ""));
        }
    }
    if (named_ok) d.push_back("named fixtures: all seven classes and CI notes as pinned");

    // pinned tail: everything not isomorphic to a named fixture is GE_TWO with no CI note
    long checked = 0;
    std::vector<long> tail_mismatch = {0, 0};  // n = 4, 5
    std::string first;
    for (int n = 4; n <= 5; ++n) {
        for (const Graph& g : corpus_graphs(n)) {
            ++checked;
            std::optional<DepthClass> expected_class;
            bool expected_ci = false;
            for (const Named& f : named) {
                if (is_isomorphic(g, f.graph)) {
                    expected_class = f.cls;
                    expected_ci = f.ci;
                    break;
                }
            }
            if (!expected_class) expected_class = DepthClass::GeTwo;
            CoverIdealReport rep = cover_ideal_report(g);
            if (rep.depth_class != *expected_class || rep.ci != expected_ci) {
                ++tail_mismatch[static_cast<std::size_t>(n - 4)];
                if (first.empty())
                    first = edges_line(g.h) + ": computed " + to_string(rep.depth_class) +
                            (rep.ci ? " (CI)" : "") + ", pinned table says " +
                            to_string(*expected_class) + (expected_ci ? " (CI)" : "");
            }
        }
    }
    long mismatches = tail_mismatch[0] + tail_mismatch[1];
    d.push_back("exhaustive tail over " + std::to_string(checked) +
                " covered graphs: " + std::to_string(mismatches) + " disagreements (n=4: " +
                std::to_string(tail_mismatch[0]) + ", n=5: " + std::to_string(tail_mismatch[1]) +
                ")");
    if (!first.empty()) {
        d.push_back("first: " + first);
        d.push_back("the oracle sides with the computed class on every disagreeing graph "
                    "(criteria 6 and 7 sweep the same corpus)");
    }
    return named_ok && mismatches == 0;
}

bool criterion_6(Detail& d) {
    Mismatches bad;
    long total = 0;
    for (int n = 2; n <= 6; ++n) {
        const std::vector<Graph>& graphs = corpus_graphs(n);
        total += static_cast<long>(graphs.size());
        parallel_for(graphs.size(), [&](std::size_t i) {
            const Graph& g = graphs[i];
            MonomialIdeal isq = ideal_square(edge_ideal(g.h));
            DepthClass fast = depth_class_graph(g).depth_class;
            DepthClass slow = depth_class_oracle(isq);
            bool depth_ok = fast == slow;
            bool ass_ok = supports(ass_primes_graph(g)) == ass_primes_oracle(isq);
            if (!depth_ok || !ass_ok)
                bad.record(edges_line(g.h) + (depth_ok ? "" : " [depth]") +
                           (ass_ok ? "" : " [associated primes]"));
        });
    }
    d.push_back("edge ideals over " + std::to_string(total) + " covered graphs (n = 2..6): " +
                std::to_string(bad.count.load()) + " disagreements with the oracle");
    if (!bad.first.empty()) d.push_back("first: " + bad.first);
    return bad.count.load() == 0;
}

bool criterion_7(Detail& d) {
    Mismatches bad;
    long total = 0;
    for (int n = 2; n <= 6; ++n) {
        const std::vector<Graph>& graphs = corpus_graphs(n);
        total += static_cast<long>(graphs.size());
        parallel_for(graphs.size(), [&](std::size_t i) {
            const Graph& g = graphs[i];
            MonomialIdeal jsq = ideal_square(edge_ideal(cover_hypergraph(g)));
            bool depth_ok = cover_depth_class(g) == depth_class_oracle(jsq);
            bool ass_ok = supports(cover_ass_primes(g)) == ass_primes_oracle(jsq);
            if (!depth_ok || !ass_ok)
                bad.record(edges_line(g.h) + (depth_ok ? "" : " [depth]") +
                           (ass_ok ? "" : " [associated primes]"));
        });
    }
    d.push_back("cover ideals over " + std::to_string(total) + " covered graphs (n = 2..6): " +
                std::to_string(bad.count.load()) + " disagreements with the oracle");
    if (!bad.first.empty()) d.push_back("first: " + bad.first);
    return bad.count.load() == 0;
}

bool criterion_8(Detail& d) {
    std::vector<Hypergraph> corpus = random_corpus(200, 42);
    Mismatches bad;
    std::atomic<long> complexes{0};
    parallel_for(corpus.size(), [&](std::size_t i) {
        const Hypergraph& h = corpus[i];
        TakayamaOracle oracle(ideal_square(edge_ideal(h)));
        for (std::uint64_t mask = 0; mask < (1ULL << h.n); ++mask) {
            MultiDegree a(static_cast<std::size_t>(h.n), 0);
            for (int v = 0; v < h.n; ++v) a[static_cast<std::size_t>(v)] = (mask >> v) & 1 ? 1 : 0;
            complexes.fetch_add(1);
            if (!(delta_a_combinatorial(h, a) == oracle.delta_a(a)))
                bad.record(edges_line(h) + " at degree mask " + std::to_string(mask));
        }
    });
    d.push_back("200 seeded hypergraphs, " + std::to_string(complexes.load()) +
                " degree complexes: " + std::to_string(bad.count.load()) +
                " facet-set disagreements");
    if (!bad.first.empty()) d.push_back("first: " + bad.first);
    return bad.count.load() == 0;
}

bool criterion_9(Detail& d) {
    Mismatches bad;
    std::atomic<long> instances{0};

    auto check_instance = [&](const Hypergraph& h, const Graph* graph) {
        instances.fetch_add(1);
        for (std::uint64_t mask = 0; mask < (1ULL << h.n); ++mask) {
            VertexSet u{mask};
            if (is_2_saturating(h, u).has_value() != is_2_saturating_sections(h, u)) {
                bad.record(edges_line(h) + ": 2-saturating routes split on U = " +
                           format_vertex_set(u));
                return;
            }
        }
        std::vector<AssociatedPrime> general = ass_primes_general(h);
        if (!same_primes(general, ass_primes_loose_guided(h))) {
            bad.record(edges_line(h) + ": guided prime enumeration disagrees");
            return;
        }
        if (graph && !same_primes(general, ass_primes_graph(*graph))) {
            bad.record(edges_line(h) + ": graph fast path disagrees");
            return;
        }
        if (symbolic_equals_square(h).equal != symbolic_equals_square_monomial_form(h))
            bad.record(edges_line(h) + ": symbolic-square routes disagree");
    };

    for (int n = 2; n <= 6; ++n) {
        const std::vector<Graph>& graphs = corpus_graphs(n);
        parallel_for(graphs.size(), [&](std::size_t i) { check_instance(graphs[i].h, &graphs[i]); });
    }
    std::vector<Hypergraph> corpus = random_corpus(200, 42);
    parallel_for(corpus.size(), [&](std::size_t i) { check_instance(corpus[i], nullptr); });

    d.push_back(std::to_string(instances.load()) +
                " instances, all vertex subsets each: " + std::to_string(bad.count.load()) +
                " dual-implementation disagreements");
    if (!bad.first.empty()) d.push_back("first: " + bad.first);
    return bad.count.load() == 0;
}

bool criterion_10(Detail& d) {
    bool ok = true;
    for (int variant = 1; variant <= 3; ++variant) {
        Hypergraph h = gen_loose_family(variant);
        if (!is_loosely_intersecting(h)) {
            d.push_back("variant " + std::to_string(variant) + " rejected");
            ok = false;
            continue;
        }
        int fragile = 0;
        for (std::size_t k = 0; k < h.edges.size(); ++k) {
            std::vector<VertexSet> rest;
            for (std::size_t j = 0; j < h.edges.size(); ++j)
                if (j != k) rest.push_back(h.edges[j]);
            if (!is_loosely_intersecting(make_hypergraph(h.n, std::move(rest)))) ++fragile;
        }
        if (fragile != static_cast<int>(h.edges.size())) {
            d.push_back("variant " + std::to_string(variant) + ": only " +
                        std::to_string(fragile) + " of " + std::to_string(h.edges.size()) +
                        " edge removals break the property");
            ok = false;
        }
    }
    if (ok) d.push_back("all three variants accepted; every single edge removal breaks each");
    return ok;
}

bool criterion_11(Detail& d) {
    Mismatches bad;
    std::atomic<long> ge_two{0};

    auto check_instance = [&](const Hypergraph& h) {
        if (depth_class_oracle(ideal_square(edge_ideal(h))) != DepthClass::GeTwo) return;
        ge_two.fetch_add(1);
        if (!skeleton_diameter_ok(h)) bad.record(edges_line(h));
    };

    for (int n = 2; n <= 6; ++n) {
        const std::vector<Graph>& graphs = corpus_graphs(n);
        parallel_for(graphs.size(), [&](std::size_t i) { check_instance(graphs[i].h); });
    }
    std::vector<Hypergraph> corpus = random_corpus(200, 42);
    parallel_for(corpus.size(), [&](std::size_t i) { check_instance(corpus[i]); });

    d.push_back(std::to_string(ge_two.load()) +
                " oracle GE_TWO instances, skeleton diameter counterexamples: " +
                std::to_string(bad.count.load()));
    if (!bad.first.empty()) d.push_back("first: " + bad.first);
    return bad.count.load() == 0;
}

}  // namespace

int main() {
    int failed = 0;
    failed += run_criterion(1, "tailed-triangle depth classes", 1.0, criterion_1);
    failed += run_criterion(2, "embedded primes of the tailed triangles", 1.0, criterion_2);
    failed += run_criterion(3, "all 3-subsets of a 4-set: diameter and zero certificate", 1.0,
                            criterion_3);
    failed += run_criterion(4, "depth-one condition profiles", 1.0, criterion_4);
    failed += run_criterion(5, "cover-ideal gallery, exhaustive n = 4, 5", 30.0, criterion_5);
    failed += run_criterion(6, "edge ideals vs oracle, all covered graphs n <= 6", 600.0,
                            criterion_6);
    failed += run_criterion(7, "cover ideals vs oracle, all covered graphs n <= 6", 900.0,
                            criterion_7);
    failed += run_criterion(8, "degree-complex facet descriptions", 300.0, criterion_8);
    failed += run_criterion(9, "dual implementations agree on the full corpus", 0.0, criterion_9);
    failed += run_criterion(10, "loosely intersecting fixtures are edge-minimal", 1.0,
                            criterion_10);
    failed += run_criterion(11, "oracle GE_TWO forces small skeleton diameter", 0.0, criterion_11);

    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
