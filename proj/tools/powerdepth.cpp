// Command-line front end: analyze one instance, sweep a corpus against the
// oracle, or print a generated instance.

#include "CLI11.hpp"
#include "powerdepth/analysis.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace powerdepth;

IdealKind kind_of(const std::string& s) {
    return s == "cover" ? IdealKind::Cover : IdealKind::Edge;
}

int run_analyze(const std::string& path, const std::string& ideal, bool with_oracle, bool as_json) {
    Hypergraph h;
    try {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open " << path << '\n';
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        h = parse_hypergraph(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    }
    AnalysisReport report;
    try {
        report = analyze(h, kind_of(ideal), with_oracle);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    }
    std::cout << (as_json ? render_json(report) : render_text(report));
    if (report.oracle && (!report.oracle->depth_agrees || !report.oracle->ass_agrees)) return 3;
    return 0;
}

int run_crosscheck(int all_graphs, int random_count, std::uint64_t seed, const std::string& ideal) {
    CrosscheckSummary summary;
    try {
        if (all_graphs > 0)
            summary = crosscheck_all_graphs(all_graphs, kind_of(ideal));
        else
            summary = crosscheck_random(random_count, seed, kind_of(ideal));
    } catch (const std::exception& e) {
        std::cerr << "crosscheck error: " << e.what() << '\n';
        return 2;
    }
    std::cout << render_summary(summary);
    return summary.failed_instances > 0 ? 1 : 0;
}

int run_gen(const std::string& kind, int n, int m, int p, int tail, std::uint64_t seed) {
    try {
        Graph g = gen_cycle(3);
        if (kind == "cycle") {
            g = gen_cycle(n);
        } else if (kind == "complete-bipartite") {
            g = gen_complete_bipartite(m, p);
        } else if (kind == "triangle-path") {
            g = gen_triangle_path(tail);
        } else {
            SplitMix64 rng(seed);
            g = random_graph(n, rng);
        }
        std::cout << format_hypergraph(g.h);
    } catch (const std::exception& e) {
        std::cerr << "generation error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"depth and associated primes of squares of edge and cover ideals"};
    app.require_subcommand(1);

    std::string path;
    std::string ideal = "edge";
    bool with_oracle = false;
    bool as_json = false;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one instance file");
    analyze_cmd->add_option("file", path, "instance file (n line plus one edge per line)")->required();
    analyze_cmd->add_option("--ideal", ideal, "edge or cover")->check(CLI::IsMember({"edge", "cover"}));
    analyze_cmd->add_flag("--oracle", with_oracle, "also run the monomial-ideal oracle and compare");
    analyze_cmd->add_flag("--json", as_json, "JSON output");

    int all_graphs = 0;
    int random_count = 0;
    std::uint64_t seed = 1;
    std::string cc_ideal = "edge";
    CLI::App* cc_cmd = app.add_subcommand("crosscheck", "sweep a corpus against the oracle");
    CLI::Option* opt_all = cc_cmd->add_option("--all-graphs", all_graphs, "every covered graph on n vertices")
                               ->check(CLI::Range(2, 6));
    CLI::Option* opt_rand = cc_cmd->add_option("--random", random_count, "random instances")
                                ->check(CLI::PositiveNumber);
    cc_cmd->add_option("--seed", seed, "random seed");
    cc_cmd->add_option("--ideal", cc_ideal, "edge or cover")->check(CLI::IsMember({"edge", "cover"}));
    opt_all->excludes(opt_rand);

    std::string gen_kind;
    int n = 5, m = 2, p = 2, tail = 2;
    std::uint64_t gen_seed = 1;
    CLI::App* gen_cmd = app.add_subcommand("gen", "print a generated instance");
    gen_cmd->add_option("kind", gen_kind, "cycle | complete-bipartite | triangle-path | random")
        ->required()
        ->check(CLI::IsMember({"cycle", "complete-bipartite", "triangle-path", "random"}));
    gen_cmd->add_option("--n", n, "vertex count (cycle, random)");
    gen_cmd->add_option("--m", m, "left side size (complete-bipartite)");
    gen_cmd->add_option("--p", p, "right side size (complete-bipartite)");
    gen_cmd->add_option("--tail", tail, "path length after the triangle (triangle-path)");
    gen_cmd->add_option("--seed", gen_seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    if (analyze_cmd->parsed()) return run_analyze(path, ideal, with_oracle, as_json);
    if (cc_cmd->parsed()) {
        if (all_graphs == 0 && random_count == 0) {
            std::cerr << "crosscheck needs --all-graphs or --random\n";
            return 2;
        }
        return run_crosscheck(all_graphs, random_count, seed, cc_ideal);
    }
    return run_gen(gen_kind, n, m, p, tail, gen_seed);
}
