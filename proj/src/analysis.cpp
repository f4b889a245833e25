#include "powerdepth/analysis.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace powerdepth {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::vector<VertexSet> prime_supports(const std::vector<AssociatedPrime>& primes) {
    std::vector<VertexSet> out;
    out.reserve(primes.size());
    for (const auto& p : primes) out.push_back(p.c);
    return out;
}

bool has_embedded(const std::vector<AssociatedPrime>& primes) {
    for (const auto& p : primes)
        if (!p.minimal) return true;
    return false;
}

std::string instance_label(const Hypergraph& h) {
    std::string s = "n=" + std::to_string(h.n) + " edges";
    for (VertexSet e : h.edges) s += " " + format_vertex_set(e);
    return s;
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("POWERDEPTH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 256));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = static_cast<std::size_t>(worker_count());
    if (count <= 1 || workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto body = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
                stop.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t spawn = std::min(workers, count);
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

AnalysisReport analyze(const Hypergraph& h, IdealKind kind, bool with_oracle) {
    AnalysisReport r;
    r.h = h;
    r.kind = kind;
    r.graph_input = is_graph(h);

    if (kind == IdealKind::Cover) {
        if (!r.graph_input) throw std::invalid_argument("cover ideal analysis requires a graph");
        Graph g = as_graph(h);
        CoverIdealReport cov = cover_ideal_report(g);
        r.depth_class = cov.depth_class;
        r.depth_zero = cov.depth_class == DepthClass::Zero;
        r.deciding_rule = cov.depth_rule;
        r.ass_primes = cov.ass_primes;
        r.ass_available = true;
        r.ci = cov.ci;
        r.cm_note = cov.cm_note;
        Hypergraph ch = cover_hypergraph(g);
        if (r.depth_zero) {
            CoverSaturatingSets sets = cover_saturating_sets(g, h.verts);
            if (sets.kind == CoverSaturatingKind::None || sets.sets.empty())
                throw std::logic_error("depth zero without a saturating set at the full vertex set");
            r.zero_certificate = is_2_saturating(ch, sets.sets.front());
            if (!r.zero_certificate) throw std::logic_error("cover saturating set fails to replay");
        }
        SymbolicSquareResult sym = symbolic_equals_square(ch);
        r.symbolic_equal = sym.equal;
        r.symbolic_witness = sym.witness;
        if (with_oracle) {
            if (h.n <= 10) {
                MonomialIdeal jsq = ideal_square(edge_ideal(ch));
                OracleSection sec;
                sec.depth_class = depth_class_oracle(jsq);
                sec.ass = ass_primes_oracle(jsq);
                sec.depth_agrees = r.depth_class && *r.depth_class == sec.depth_class;
                sec.ass_agrees = prime_supports(r.ass_primes) == sec.ass;
                r.oracle = sec;
            } else {
                r.warnings.push_back("oracle skipped (n > 10)");
            }
        }
        return r;
    }

    if (r.graph_input) {
        Graph g = as_graph(h);
        GraphDepthReport rep = depth_class_graph(g);
        r.depth_class = rep.depth_class;
        r.depth_zero = rep.depth_class == DepthClass::Zero;
        r.deciding_rule = r.depth_zero ? "dominating triangle"
                                       : "complement diameter and triangle neighborhoods";
        r.zero_certificate = rep.zero_certificate;
        r.graph_conditions = rep.conditions;
        r.skeleton_ok = skeleton_diameter_ok(h);
        r.ass_primes = ass_primes_graph(g);
        r.ass_available = true;
        if (auto bip = is_bipartite(g)) {
            bool literal = depth_ge_2_bipartite(g, bip->first, bip->second);
            if (literal != (rep.depth_class == DepthClass::GeTwo))
                r.warnings.push_back(
                    "bipartite two-sided rule disagrees with the exact classification; "
                    "the exact answer is reported");
        }
    } else {
        HypergraphDepthReport rep = hypergraph_depth_report(h);
        r.depth_zero = rep.depth_zero;
        r.zero_certificate = rep.zero_certificate;
        r.skeleton_ok = rep.skeleton_diameter_ok;
        if (rep.depth_zero) {
            r.depth_class = DepthClass::Zero;
            r.deciding_rule = "2-saturating set";
        } else if (!rep.skeleton_diameter_ok) {
            r.depth_class = DepthClass::One;
            r.deciding_rule = "no 2-saturating set; skeleton diameter exceeds two";
        } else if (rep.oracle_class) {
            r.depth_class = *rep.oracle_class;
            r.deciding_rule = "no 2-saturating set; degree-slice connectivity";
        } else {
            r.deciding_rule = "no 2-saturating set; one/two split unresolved";
            r.warnings.push_back("depth one/two split unresolved (n > 10)");
        }
        if (h.n <= 16) {
            r.ass_primes = ass_primes_general(h);
            r.ass_available = true;
        } else {
            r.warnings.push_back("associated primes skipped (n > 16)");
        }
    }

    SymbolicSquareResult sym = symbolic_equals_square(h);
    r.symbolic_equal = sym.equal;
    r.symbolic_witness = sym.witness;

    if (with_oracle) {
        if (h.n <= 10) {
            MonomialIdeal isq = ideal_square(edge_ideal(h));
            OracleSection sec;
            sec.depth_class = depth_class_oracle(isq);
            sec.ass = ass_primes_oracle(isq);
            sec.depth_agrees = r.depth_class ? *r.depth_class == sec.depth_class
                                             : r.depth_zero == (sec.depth_class == DepthClass::Zero);
            sec.ass_agrees = r.ass_available && prime_supports(r.ass_primes) == sec.ass;
            r.oracle = sec;
        } else {
            r.warnings.push_back("oracle skipped (n > 10)");
        }
    }
    return r;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    const char* label = r.kind == IdealKind::Cover ? "J" : "I";
    os << "input: n = " << r.h.n << ", edges:";
    for (VertexSet e : r.h.edges) os << ' ' << format_vertex_set(e);
    os << '\n';
    os << "ideal: "
       << (r.kind == IdealKind::Cover ? "cover ideal"
                                      : (r.graph_input ? "edge ideal (graph)" : "edge ideal (hypergraph)"))
       << '\n';
    os << "depth class of R/" << label << "^2: "
       << (r.depth_class ? to_string(*r.depth_class) : "POSITIVE_UNRESOLVED") << "  [" << r.deciding_rule
       << "]\n";
    if (r.graph_conditions) {
        os << "  dominating triangle: " << (r.graph_conditions->no_dominating_triangle ? "none" : "present")
           << '\n';
        os << "  complement diameter <= 2: " << yn(r.graph_conditions->complement_diameter_ok) << '\n';
        os << "  triangle neighborhoods connected: " << yn(r.graph_conditions->triangle_neighborhoods_ok)
           << '\n';
    }
    if (r.skeleton_ok)
        os << "  skeleton diameter <= 2: " << yn(*r.skeleton_ok) << " (needed for depth >= 2)\n";
    if (r.zero_certificate) {
        const SaturatingCertificate& cert = *r.zero_certificate;
        const char* kind = cert.kind == SaturatingCertificate::Kind::EmptyOrVertex ? "empty or vertex"
                           : cert.kind == SaturatingCertificate::Kind::DominatingTriangle
                               ? "dominating triangle"
                               : "general";
        os << "zero certificate: U = " << format_vertex_set(cert.u) << " (" << kind << ")\n";
        for (const VertexWitness& w : cert.witnesses)
            os << "  vertex " << w.vertex + 1 << ": " << format_vertex_set(w.f) << " | "
               << format_vertex_set(w.g) << '\n';
    }
    if (r.ass_available) {
        os << "associated primes of " << label << "^2 (" << r.ass_primes.size() << "):\n";
        for (const AssociatedPrime& p : r.ass_primes) {
            os << "  " << format_vertex_set(p.c) << (p.minimal ? "  minimal" : "  embedded");
            if (p.certificate) os << "  U = " << format_vertex_set(p.certificate->u);
            if (!p.origin_triangles.empty()) {
                os << "  triangles:";
                for (VertexSet t : p.origin_triangles) os << ' ' << format_vertex_set(t);
            }
            os << '\n';
        }
    }
    os << "symbolic square: " << label << "^(2) " << (r.symbolic_equal ? "==" : "!=") << ' ' << label
       << "^2";
    if (r.symbolic_witness)
        os << "  witness edges " << format_vertex_set(r.symbolic_witness->f1) << ' '
           << format_vertex_set(r.symbolic_witness->f2) << ' ' << format_vertex_set(r.symbolic_witness->f3);
    os << '\n';
    if (r.ci) {
        os << "complete intersection: " << yn(*r.ci);
        if (r.cm_note) os << "  (" << *r.cm_note << ")";
        os << '\n';
        os << "(S2): " << yn(*r.ci) << '\n';
    }
    if (r.oracle) {
        os << "oracle: depth class " << to_string(r.oracle->depth_class)
           << (r.oracle->depth_agrees ? " [agrees]" : " [DISAGREES]") << "; associated primes "
           << r.oracle->ass.size() << (r.oracle->ass_agrees ? " [agree]" : " [DISAGREE]") << '\n';
    }
    for (const std::string& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

namespace {

using nlohmann::json;

json set_to_json(VertexSet s) {
    json a = json::array();
    for_each_vertex(s, [&](int v) { a.push_back(v + 1); });
    return a;
}

json cert_to_json(const SaturatingCertificate& c) {
    json witnesses = json::array();
    for (const VertexWitness& w : c.witnesses)
        witnesses.push_back({{"vertex", w.vertex + 1}, {"f", set_to_json(w.f)}, {"g", set_to_json(w.g)}});
    const char* kind = c.kind == SaturatingCertificate::Kind::EmptyOrVertex ? "empty_or_vertex"
                       : c.kind == SaturatingCertificate::Kind::DominatingTriangle ? "dominating_triangle"
                                                                                   : "general";
    return {{"u", set_to_json(c.u)}, {"kind", kind}, {"witnesses", witnesses}};
}

json triangle_to_json(const SpecialTriangle& t) {
    return {{"f1", set_to_json(t.f1)}, {"f2", set_to_json(t.f2)},     {"f3", set_to_json(t.f3)},
            {"v1", t.v1 + 1},          {"v2", t.v2 + 1},              {"v3", t.v3 + 1},
            {"empty_intersection", t.empty_intersection}};
}

}  // namespace

std::string render_json(const AnalysisReport& r) {
    json j;
    j["schema_version"] = 1;
    j["ideal"] = r.kind == IdealKind::Cover ? "cover" : "edge";
    j["n"] = r.h.n;
    json edges = json::array();
    for (VertexSet e : r.h.edges) edges.push_back(set_to_json(e));
    j["edges"] = edges;
    j["is_graph"] = r.graph_input;

    json depth;
    depth["class"] = r.depth_class ? to_string(*r.depth_class) : "POSITIVE_UNRESOLVED";
    depth["zero"] = r.depth_zero;
    depth["rule"] = r.deciding_rule;
    depth["zero_certificate"] = r.zero_certificate ? cert_to_json(*r.zero_certificate) : json(nullptr);
    if (r.graph_conditions) {
        depth["graph_conditions"] = {
            {"no_dominating_triangle", r.graph_conditions->no_dominating_triangle},
            {"complement_diameter_ok", r.graph_conditions->complement_diameter_ok},
            {"triangle_neighborhoods_ok", r.graph_conditions->triangle_neighborhoods_ok}};
    } else {
        depth["graph_conditions"] = nullptr;
    }
    depth["skeleton_diameter_ok"] = r.skeleton_ok ? json(*r.skeleton_ok) : json(nullptr);
    j["depth"] = depth;

    if (r.ass_available) {
        json primes = json::array();
        for (const AssociatedPrime& p : r.ass_primes) {
            json origin = json::array();
            for (VertexSet t : p.origin_triangles) origin.push_back(set_to_json(t));
            primes.push_back({{"c", set_to_json(p.c)},
                              {"minimal", p.minimal},
                              {"saturating_set", p.certificate ? set_to_json(p.certificate->u) : json(nullptr)},
                              {"certificate", p.certificate ? cert_to_json(*p.certificate) : json(nullptr)},
                              {"origin_triangles", origin}});
        }
        j["ass_primes"] = primes;
    } else {
        j["ass_primes"] = nullptr;
    }

    j["symbolic"] = {{"equal", r.symbolic_equal},
                     {"witness", r.symbolic_witness ? triangle_to_json(*r.symbolic_witness) : json(nullptr)}};

    if (r.kind == IdealKind::Cover && r.ci) {
        j["cover"] = {{"complete_intersection", *r.ci},
                      {"s2", *r.ci},
                      {"cm_note", r.cm_note ? json(*r.cm_note) : json(nullptr)}};
    } else {
        j["cover"] = nullptr;
    }

    if (r.oracle) {
        json oass = json::array();
        for (VertexSet c : r.oracle->ass) oass.push_back(set_to_json(c));
        j["oracle"] = {{"depth_class", to_string(r.oracle->depth_class)},
                       {"ass", oass},
                       {"depth_agrees", r.oracle->depth_agrees},
                       {"ass_agrees", r.oracle->ass_agrees}};
    } else {
        j["oracle"] = nullptr;
    }

    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

namespace {

// Shared edge-ideal bundle; graph-shaped inputs get the extra graph-only
// comparisons.
InstanceChecks check_edge_instance(const Hypergraph& h) {
    InstanceChecks out;
    auto fail = [&](std::string m) { out.failures.push_back(std::move(m)); };
    try {
        const bool graph_shaped = is_graph(h);
        DepthPositiveResult pos = depth_positive_second_power(h);
        if (pos.certificate && !verify_certificate(h, *pos.certificate))
            fail("zero certificate does not replay");
        if (pos.positive == pos.certificate.has_value()) fail("positivity result inconsistent");

        std::optional<DepthClass> mine;
        if (graph_shaped) {
            Graph g = as_graph(h);
            GraphDepthReport rep = depth_class_graph(g);
            mine = rep.depth_class;
            if ((rep.depth_class == DepthClass::Zero) == pos.positive)
                fail("positivity and class routes disagree");
            if (auto bip = is_bipartite(g)) {
                if (depth_ge_2_bipartite(g, bip->first, bip->second) !=
                    (rep.depth_class == DepthClass::GeTwo))
                    out.warnings.push_back(std::string("bipartite two-sided rule disagrees, exact class ") +
                                           to_string(rep.depth_class));
            }
        } else if (!pos.positive) {
            mine = DepthClass::Zero;
        } else if (!skeleton_diameter_ok(h)) {
            // positive depth and skeleton diameter > 2 pins the class at one
            mine = DepthClass::One;
        }

        std::vector<AssociatedPrime> ass;
        if (h.n <= 16) {
            ass = ass_primes_general(h);
            for (const AssociatedPrime& p : ass) {
                if (!is_cover(h, p.c)) fail("associated prime is not a cover: " + format_vertex_set(p.c));
                if (!p.certificate || !verify_certificate(induced(h, p.c), *p.certificate))
                    fail("certificate replay failed for " + format_vertex_set(p.c));
            }
            if (graph_shaped) {
                std::vector<AssociatedPrime> viagraph = ass_primes_graph(as_graph(h));
                if (prime_supports(viagraph) != prime_supports(ass)) {
                    fail("graph associated-prime route disagrees with the cover scan");
                } else {
                    for (std::size_t i = 0; i < ass.size(); ++i) {
                        if (ass[i].minimal != viagraph[i].minimal)
                            fail("minimal flags disagree at " + format_vertex_set(ass[i].c));
                        if (!viagraph[i].certificate ||
                            !verify_certificate(induced(h, viagraph[i].c), *viagraph[i].certificate))
                            fail("graph-route certificate replay failed for " +
                                 format_vertex_set(viagraph[i].c));
                    }
                }
            }
            if (h.n <= 5) {
                std::vector<AssociatedPrime> guided = ass_primes_loose_guided(h);
                if (prime_supports(guided) != prime_supports(ass))
                    fail("loose-guided associated-prime route disagrees");
            }
        }

        SymbolicSquareResult sym = symbolic_equals_square(h);
        if (sym.equal != symbolic_equals_square_monomial_form(h)) fail("symbolic-square routes disagree");
        if (!sym.equal && !sym.witness) fail("missing symbolic witness");
        if (h.n <= 16 && sym.equal == has_embedded(ass))
            fail("symbolic equality inconsistent with embedded primes");

        if (support(h).count() >= 2 && is_loosely_intersecting(h) &&
            special_triangles(h, true).empty())
            fail("loosely intersecting but no empty-core special triangle");

        if (h.n <= 6) {
            for_each_subset(h.verts, [&](VertexSet u) {
                bool literal = is_2_saturating(h, u).has_value();
                if (literal != is_2_saturating_sections(h, u))
                    fail("2-saturating routes disagree at U = " + format_vertex_set(u));
                if (literal && u.count() == 2) fail("2-saturating pair " + format_vertex_set(u));
            });
        }

        if (h.n <= 10) {
            MonomialIdeal isq = ideal_square(edge_ideal(h));
            DepthClass ocls = depth_class_oracle(isq);
            if (mine && *mine != ocls)
                fail(std::string("depth class mismatch: combinatorial ") + to_string(*mine) + ", oracle " +
                     to_string(ocls));
            if (pos.positive == (ocls == DepthClass::Zero)) fail("zero/positive mismatch vs oracle");
            if (ocls == DepthClass::GeTwo && !skeleton_diameter_ok(h))
                fail("oracle depth >= 2 but skeleton diameter exceeds two");
            if (h.n <= 16) {
                std::vector<VertexSet> oass = ass_primes_oracle(isq);
                if (prime_supports(ass) != oass) fail("associated primes disagree with oracle");
            }
            if (h.n <= 5) {
                TakayamaOracle tak(isq);
                MultiDegree a(h.n, 0);
                for (std::uint32_t mask = 0; mask < (1u << h.n); ++mask) {
                    for (int j = 0; j < h.n; ++j) a[j] = (mask >> j) & 1;
                    if (!(delta_a_combinatorial(h, a) == tak.delta_a(a)))
                        fail("degree complex mismatch at a = mask " + std::to_string(mask));
                }
            }
        }
    } catch (const std::exception& e) {
        out.failures.push_back(std::string("exception: ") + e.what());
    }
    return out;
}

}  // namespace

InstanceChecks check_edge_graph(const Graph& g) { return check_edge_instance(g.h); }

InstanceChecks check_edge_hypergraph(const Hypergraph& h) { return check_edge_instance(h); }

InstanceChecks check_cover_graph(const Graph& g) {
    InstanceChecks out;
    auto fail = [&](std::string m) { out.failures.push_back(std::move(m)); };
    try {
        const Hypergraph& gh = g.h;
        const int n = gh.n;
        Hypergraph ch = cover_hypergraph(g);
        CoverIdealReport rep = cover_ideal_report(g);

        for (const AssociatedPrime& p : rep.ass_primes) {
            if (!p.certificate || !verify_certificate(induced(ch, p.c), *p.certificate))
                fail("cover certificate replay failed for " + format_vertex_set(p.c));
        }

        // closed-form saturating sets against the generic scan
        if (n <= 6) {
            for_each_subset(gh.verts, [&](VertexSet c) {
                std::vector<VertexSet> expected = cover_saturating_sets(g, c).sets;
                std::vector<VertexSet> found;
                Hypergraph hc = induced(ch, c);
                for_each_subset(c, [&](VertexSet u) {
                    if (is_2_saturating(hc, u)) found.push_back(u);
                });
                std::sort(found.begin(), found.end(), size_lex_less);
                std::sort(expected.begin(), expected.end(), size_lex_less);
                if (found != expected)
                    fail("saturating-set catalogue wrong at C = " + format_vertex_set(c));
            });
        }

        // minimal edges of the restricted cover hypergraph match the minimal
        // covers of the section
        if (n <= 6) {
            for_each_subset(gh.verts, [&](VertexSet c) {
                Hypergraph hc = induced(ch, c);
                std::vector<VertexSet> mins;
                for (VertexSet e : hc.edges) {
                    bool minimal = true;
                    for (VertexSet f : hc.edges)
                        if (f != e && f.subset_of(e)) { minimal = false; break; }
                    if (minimal && std::find(mins.begin(), mins.end(), e) == mins.end())
                        mins.push_back(e);
                }
                std::sort(mins.begin(), mins.end());
                std::vector<VertexSet> expect = minimal_covers(section(gh, c));
                if (mins != expect) fail("restricted cover edges wrong at C = " + format_vertex_set(c));
            });
        }

        SymbolicSquareResult sym = symbolic_equals_square(ch);
        if (sym.equal != symbolic_equals_square_monomial_form(ch))
            fail("symbolic-square routes disagree on the cover hypergraph");
        if (sym.equal == has_embedded(rep.ass_primes))
            fail("cover symbolic equality inconsistent with embedded primes");

        CoverDepthLiteralConditions lit{};
        if (n >= 4) {
            lit = cover_depth_literal_conditions(g);
            bool all5 = lit.not_two_edges_or_path && lit.no_odd_cycle_n_minus_1 &&
                        lit.not_cycle_plus_edge && lit.no_covering_cycle_pair && lit.not_odd_cycle;
            if (all5 != (rep.depth_class == DepthClass::GeTwo))
                out.warnings.push_back(std::string("literal depth conditions disagree, exact class ") +
                                       to_string(rep.depth_class));
        }

        if (n <= 10) {
            MonomialIdeal jsq = ideal_square(edge_ideal(ch));
            DepthClass ocls = depth_class_oracle(jsq);
            if (ocls != rep.depth_class)
                fail(std::string("cover depth class mismatch: combinatorial ") + to_string(rep.depth_class) +
                     ", oracle " + to_string(ocls));
            std::vector<VertexSet> oass = ass_primes_oracle(jsq);
            if (prime_supports(rep.ass_primes) != oass) fail("cover associated primes disagree with oracle");
            if (rep.ci) {
                DepthClass expect = n - 2 >= 2 ? DepthClass::GeTwo
                                               : (n - 2 == 1 ? DepthClass::One : DepthClass::Zero);
                if (ocls != expect) fail("complete intersection but oracle depth differs from dimension");
            }
            // The named-shape catalogue for disconnected degree slices is
            // advisory like the literal conditions above: a triangle with a
            // two-edge tail has a disconnected slice but matches no shape.
            if (n >= 4 && n <= 5) {
                TakayamaOracle tak(jsq);
                MultiDegree a(n, 0);
                bool catalogued = !lit.not_two_edges_or_path || !lit.no_odd_cycle_n_minus_1 ||
                                  !lit.not_cycle_plus_edge || !lit.no_covering_cycle_pair;
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    for (int j = 0; j < n; ++j) a[j] = (mask >> j) & 1;
                    if (!is_connected(tak.delta_a(a)) && !catalogued) {
                        out.warnings.push_back(
                            "disconnected degree slice outside the shape catalogue at a = mask " +
                            std::to_string(mask));
                        break;
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        out.failures.push_back(std::string("exception: ") + e.what());
    }
    return out;
}

namespace {

CrosscheckSummary run_crosscheck(const std::vector<Hypergraph>& instances, IdealKind kind) {
    constexpr std::size_t kNoteCap = 25;
    std::vector<InstanceChecks> results(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
        if (kind == IdealKind::Cover)
            results[i] = check_cover_graph(as_graph(instances[i]));
        else
            results[i] = check_edge_instance(instances[i]);
    });
    CrosscheckSummary s;
    s.instances = static_cast<long>(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const InstanceChecks& r = results[i];
        if (!r.failures.empty()) {
            ++s.failed_instances;
            s.failure_count += static_cast<long>(r.failures.size());
            if (s.first_counterexample.empty()) s.first_counterexample = format_hypergraph(instances[i]);
            for (const std::string& m : r.failures)
                if (s.failure_notes.size() < kNoteCap)
                    s.failure_notes.push_back(instance_label(instances[i]) + ": " + m);
        }
        s.warning_count += static_cast<long>(r.warnings.size());
        for (const std::string& m : r.warnings)
            if (s.warning_notes.size() < kNoteCap)
                s.warning_notes.push_back(instance_label(instances[i]) + ": " + m);
    }
    return s;
}

}  // namespace

CrosscheckSummary crosscheck_all_graphs(int n, IdealKind kind) {
    std::vector<Hypergraph> instances;
    for (const Graph& g : all_covered_graphs(n)) instances.push_back(g.h);
    return run_crosscheck(instances, kind);
}

CrosscheckSummary crosscheck_random(int count, std::uint64_t seed, IdealKind kind) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    SplitMix64 rng(seed);
    std::vector<Hypergraph> instances;
    instances.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (kind == IdealKind::Cover) {
            int n = 4 + static_cast<int>(rng.below(3));
            instances.push_back(random_graph(n, rng).h);
        } else {
            int n = 2 + static_cast<int>(rng.below(4));
            instances.push_back(random_hypergraph(n, rng));
        }
    }
    return run_crosscheck(instances, kind);
}

std::string render_summary(const CrosscheckSummary& s) {
    std::ostringstream os;
    os << "instances: " << s.instances << '\n';
    os << "failed instances: " << s.failed_instances << " (" << s.failure_count << " failures)\n";
    os << "warnings: " << s.warning_count << '\n';
    for (const std::string& m : s.failure_notes) os << "fail: " << m << '\n';
    for (const std::string& m : s.warning_notes) os << "warn: " << m << '\n';
    if (!s.first_counterexample.empty())
        os << "first counterexample input:\n" << s.first_counterexample;
    return os.str();
}

}  // namespace powerdepth
