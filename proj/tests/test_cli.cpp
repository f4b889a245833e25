// Functional layer behind the CLI: analyze() bundles plus the two renderers.
// JSON assertions parse the rendered string back instead of matching text.

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "powerdepth/analysis.hpp"
#include "powerdepth/generators.hpp"

#include <stdexcept>
#include <string>

using namespace powerdepth;
using namespace powerdepth::testing;
using nlohmann::json;

namespace {

json analyzed(const Hypergraph& h, IdealKind kind, bool with_oracle) {
    return json::parse(render_json(analyze(h, kind, with_oracle)));
}

Hypergraph tight_cycle(int n) {
    std::vector<VertexSet> es;
    for (int i = 0; i < n; ++i)
        es.push_back(VertexSet().with(i).with((i + 1) % n).with((i + 2) % n));
    return make_hypergraph(n, std::move(es));
}

}  // namespace

TEST_CASE("triangle edge analysis, JSON shape") {
    json j = analyzed(gen_complete(3).h, IdealKind::Edge, true);

    CHECK(j["schema_version"] == 1);
    CHECK(j["ideal"] == "edge");
    CHECK(j["n"] == 3);
    CHECK(j["is_graph"] == true);
    CHECK(j["edges"] == json::parse("[[1,2],[1,3],[2,3]]"));

    CHECK(j["depth"]["class"] == "ZERO");
    CHECK(j["depth"]["zero"] == true);
    CHECK(j["depth"]["rule"] == "dominating triangle");
    CHECK(j["depth"]["skeleton_diameter_ok"] == false);
    CHECK(j["depth"]["graph_conditions"]["no_dominating_triangle"] == false);
    CHECK(j["depth"]["graph_conditions"]["complement_diameter_ok"] == false);
    CHECK(j["depth"]["graph_conditions"]["triangle_neighborhoods_ok"] == false);

    const json& cert = j["depth"]["zero_certificate"];
    CHECK(cert["u"] == json::parse("[1,2,3]"));
    CHECK(cert["kind"] == "dominating_triangle");
    CHECK(cert["witnesses"].size() == 3);
    // every witness names a vertex of U and two disjoint singleton clips
    for (const json& w : cert["witnesses"]) {
        CHECK(w["f"].size() == 1);
        CHECK(w["g"].size() == 1);
        CHECK(w["f"] != w["g"]);
    }

    const json& primes = j["ass_primes"];
    REQUIRE(primes.size() == 4);
    int minimal = 0, embedded = 0;
    for (const json& p : primes) p["minimal"].get<bool>() ? ++minimal : ++embedded;
    CHECK(minimal == 3);
    CHECK(embedded == 1);
    const json& top = primes.back();
    CHECK(top["c"] == json::parse("[1,2,3]"));
    CHECK(top["minimal"] == false);
    CHECK(top["saturating_set"] == json::parse("[1,2,3]"));
    CHECK(top["certificate"]["kind"] == "dominating_triangle");
    CHECK(top["origin_triangles"] == json::parse("[[1,2,3]]"));

    CHECK(j["symbolic"]["equal"] == false);
    CHECK(j["symbolic"]["witness"]["empty_intersection"] == true);
    CHECK(j["symbolic"]["witness"]["f1"] == json::parse("[1,2]"));

    CHECK(j["cover"].is_null());
    CHECK(j["oracle"]["depth_class"] == "ZERO");
    CHECK(j["oracle"]["depth_agrees"] == true);
    CHECK(j["oracle"]["ass_agrees"] == true);
    CHECK(j["oracle"]["ass"].size() == 4);
    CHECK(j["warnings"].empty());
}

TEST_CASE("cover analysis carries the cover block") {
    json bow = analyzed(gen_bowtie().h, IdealKind::Cover, true);
    CHECK(bow["ideal"] == "cover");
    CHECK(bow["depth"]["class"] == "ONE");
    CHECK(bow["depth"]["rule"] == "disconnected degree slice");
    CHECK(bow["cover"]["complete_intersection"] == false);
    CHECK(bow["cover"]["s2"] == false);
    CHECK(bow["cover"]["cm_note"].is_null());
    CHECK(bow["ass_primes"].size() == 8);
    CHECK(bow["oracle"]["depth_agrees"] == true);
    CHECK(bow["oracle"]["ass_agrees"] == true);

    json k23 = analyzed(gen_complete_bipartite(2, 3).h, IdealKind::Cover, true);
    CHECK(k23["depth"]["class"] == "GE_TWO");
    CHECK(k23["cover"]["complete_intersection"] == true);
    CHECK(k23["cover"]["s2"] == true);
    CHECK(k23["cover"]["cm_note"] == "Cohen-Macaulay, depth = dim = 3");

    // S2 and complete intersection coincide for squares of cover ideals, so
    // the block never reports them apart.
    for (const json& j : {bow, k23}) CHECK(j["cover"]["s2"] == j["cover"]["complete_intersection"]);
}

TEST_CASE("cover analysis rejects non-graphs") {
    CHECK_THROWS_AS(analyze(hg(4, {{1, 2, 3}, {3, 4}}), IdealKind::Cover, false),
                    std::invalid_argument);
}

TEST_CASE("hypergraph route resolves through degree slices") {
    json j = analyzed(gen_all_k_subsets(4, 3), IdealKind::Edge, true);
    CHECK(j["is_graph"] == false);
    CHECK(j["depth"]["class"] == "ONE");
    CHECK(j["depth"]["zero"] == false);
    CHECK(j["depth"]["rule"] == "no 2-saturating set; degree-slice connectivity");
    CHECK(j["depth"]["zero_certificate"].is_null());
    CHECK(j["depth"]["graph_conditions"].is_null());
    CHECK(j["depth"]["skeleton_diameter_ok"] == true);

    int minimal = 0, embedded = 0;
    for (const json& p : j["ass_primes"]) p["minimal"].get<bool>() ? ++minimal : ++embedded;
    CHECK(minimal == 6);   // the six vertex pairs
    CHECK(embedded == 4);  // the four triples; the full set never appears
    CHECK(j["oracle"]["depth_agrees"] == true);
    CHECK(j["oracle"]["ass_agrees"] == true);
}

TEST_CASE("large instances degrade to warnings, not wrong answers") {
    json mid = analyzed(tight_cycle(11), IdealKind::Edge, false);
    CHECK(mid["depth"]["class"] == "POSITIVE_UNRESOLVED");
    CHECK(mid["depth"]["zero"] == false);
    CHECK(mid["depth"]["rule"] == "no 2-saturating set; one/two split unresolved");
    CHECK(mid["ass_primes"].is_array());
    REQUIRE(mid["warnings"].size() == 1);
    CHECK(mid["warnings"][0] == "depth one/two split unresolved (n > 10)");

    json big = analyzed(tight_cycle(17), IdealKind::Edge, true);
    CHECK(big["depth"]["class"] == "POSITIVE_UNRESOLVED");
    CHECK(big["ass_primes"].is_null());
    CHECK(big["oracle"].is_null());
    std::string all;
    for (const json& w : big["warnings"]) all += w.get<std::string>() + "\n";
    CHECK(all.find("associated primes skipped (n > 16)") != std::string::npos);
    CHECK(all.find("oracle skipped (n > 10)") != std::string::npos);
}

TEST_CASE("bipartite advisory is a warning only") {
    AnalysisReport r = analyze(gen_path(5).h, IdealKind::Edge, true);
    CHECK(*r.depth_class == DepthClass::GeTwo);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("bipartite") != std::string::npos);
    CHECK(r.oracle->depth_agrees);
    CHECK(r.oracle->ass_agrees);

    // Cycles of even length satisfy the two-sided rule exactly; no warning.
    CHECK(analyze(gen_cycle(6).h, IdealKind::Edge, false).warnings.empty());
}

TEST_CASE("text rendering names the deciding rule and certificates") {
    std::string tri = render_text(analyze(gen_complete(3).h, IdealKind::Edge, true));
    CHECK(tri.find("depth class of R/I^2: ZERO  [dominating triangle]") != std::string::npos);
    CHECK(tri.find("zero certificate: U = {1,2,3} (dominating triangle)") != std::string::npos);
    CHECK(tri.find("{1,2,3}  embedded  U = {1,2,3}  triangles: {1,2,3}") != std::string::npos);
    CHECK(tri.find("symbolic square: I^(2) != I^2") != std::string::npos);
    CHECK(tri.find("oracle: depth class ZERO [agrees]; associated primes 4 [agree]") !=
          std::string::npos);

    std::string bow = render_text(analyze(gen_bowtie().h, IdealKind::Cover, true));
    CHECK(bow.find("depth class of R/J^2: ONE  [disconnected degree slice]") != std::string::npos);
    CHECK(bow.find("complete intersection: no") != std::string::npos);
    CHECK(bow.find("(S2): no") != std::string::npos);
}

TEST_CASE("format and parse round trip") {
    auto same = [](const Hypergraph& a, const Hypergraph& b) {
        return a.n == b.n && a.edges == b.edges;
    };
    for (const Hypergraph& h : {gen_complete(3).h, gen_cycle(5).h, gen_triangle_path(2).h,
                                gen_all_k_subsets(4, 3), gen_loose_family(2)})
        CHECK(same(parse_hypergraph(format_hypergraph(h)), h));

    SplitMix64 rng(99);
    for (int t = 0; t < 25; ++t) {
        Hypergraph h = random_hypergraph(2 + static_cast<int>(rng.next() % 5), rng);
        CHECK(same(parse_hypergraph(format_hypergraph(h)), h));
    }
}
