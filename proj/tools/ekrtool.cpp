// ekrtool: verification workbench for intersecting families of independent
// sets in unions of paths and claws. Every subcommand emits a JSON report
// envelope (or text/CSV) and exits 0 on pass, 1 on verification failure,
// 2 on a precondition violation, 3 on a blown search budget, 64 on usage.
#include "ekr/cycle.hpp"
#include "ekr/family.hpp"
#include "ekr/graph.hpp"
#include "ekr/indep.hpp"
#include "ekr/reporting.hpp"
#include "ekr/sampler.hpp"
#include "ekr/search.hpp"
#include "ekr/shifting.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ekr;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_precondition = 2;
constexpr int exit_budget = 3;
constexpr int exit_usage = 64;

struct Options {
    std::string kind = "paths";
    int n = 1;
    int k = 2;
    int r = 1;
    int s = 0;
    int t = 1;
    int u = 0;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = default_seed;
    int threads = 1;
    int budget_members = SearchBudget{}.max_members;
    long long budget_nodes = SearchBudget{}.max_nodes;

    std::string in_file;
    int random_count = 0;
    bool members = false;
    int stratum = -1;
    int star_vertex = 0;  // 1-based; 0 = unset
    std::string sigma_mode = "identity";
    int samples = 1;
    std::string mode = "full";
    int max_n = 4;
    int max_r = 4;
    std::vector<std::string> kinds = {"paths"};
    std::vector<int> set_ids;

    SearchBudget budget() const { return SearchBudget{budget_members, budget_nodes}; }
    Graph graph() const {
        return kind == "paths" ? build_p3_union(n) : build_kclaw_union(n, k);
    }
};

// Relative --out paths land in $EKRTOOL_OUT_DIR when set.
void emit(const Options& o, const std::string& body) {
    std::string text = body;
    if (text.empty() || text.back() != '\n') text += '\n';
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path p(o.out);
    if (p.is_relative())
        if (const char* dir = std::getenv("EKRTOOL_OUT_DIR")) p = std::filesystem::path(dir) / p;
    std::ofstream file(p);
    if (!file) throw std::runtime_error("cannot open output file " + p.string());
    file << text;
}

int finish(const Options& o, const std::string& command, Json config, Json result, bool pass,
           const std::string& text) {
    if (o.format == "json")
        emit(o, make_report(command, std::move(config), std::move(result), pass).dump(2));
    else
        emit(o, text);
    return pass ? exit_pass : exit_fail;
}

Json graph_config(const Options& o) {
    Json config{{"kind", o.kind}, {"n", o.n}};
    if (o.kind == "claws") config["k"] = o.k;
    return config;
}

int run_enumerate(const Options& o) {
    const Graph g = o.graph();
    Json config = graph_config(o);
    config["r"] = o.r;

    Family fam;
    bool pass = true;
    std::ostringstream text;
    Json result = to_json(g);
    result["r"] = o.r;
    if (o.stratum >= 0) {
        fam = enumerate_stratum(g, o.r, o.stratum);
        config["stratum"] = o.stratum;
        result["stratum"] = o.stratum;
        result["count"] = fam.size();
        text << "stratum s=" << o.stratum << " of independent " << o.r << "-sets, "
             << kind_name(g.kind) << " n=" << g.n << ": " << fam.size();
        if (g.kind == GraphKind::P3Union) {
            const Int formula = stratum_count(g.n, o.r, o.stratum);
            result["formula_count"] = formula.get_str();
            pass = Int(fam.size()) == formula;
            text << " (closed form " << formula.get_str() << (pass ? ", agrees)" : ", MISMATCH)");
        }
    } else if (o.star_vertex > 0) {
        g.check_vertex(o.star_vertex - 1);
        fam = star(g, o.star_vertex - 1, o.r);
        config["star"] = o.star_vertex;
        result["star"] = o.star_vertex;
        result["count"] = fam.size();
        text << "star of " << g.vertex_name(o.star_vertex - 1) << " in independent " << o.r
             << "-sets, " << kind_name(g.kind) << " n=" << g.n << ": " << fam.size();
        if (g.kind == GraphKind::P3Union && g.is_leaf(o.star_vertex - 1)) {
            const Int formula = star_size_formula(g.n, o.r);
            result["formula_count"] = formula.get_str();
            pass = Int(fam.size()) == formula;
            text << " (closed form " << formula.get_str() << (pass ? ", agrees)" : ", MISMATCH)");
        }
    } else {
        fam = enumerate_independent(g, o.r);
        result["count"] = fam.size();
        text << "independent " << o.r << "-sets of " << kind_name(g.kind) << " n=" << g.n << ": "
             << fam.size();
    }
    if (o.members) {
        result["family"] = family_to_json(fam);
        for (const auto& m : fam.members()) text << '\n' << "  " << set_names(g, m);
    }
    return finish(o, "enumerate", config, result, pass, text.str());
}

int run_shift(const Options& o) {
    const Graph g = o.graph();
    Json config = graph_config(o);
    config["r"] = o.r;

    Family input;
    if (!o.in_file.empty()) {
        std::ifstream file(o.in_file);
        if (!file) throw std::invalid_argument("cannot read family file " + o.in_file);
        Json doc = Json::parse(file);
        // Accept either a bare family object or a full report carrying one.
        if (doc.contains("result") && doc["result"].contains("family"))
            doc = doc["result"]["family"];
        input = family_from_json(doc);
        config["in"] = o.in_file;
    } else {
        Rng rng(o.seed);
        input = random_intersecting_family(g, o.r, o.random_count, rng);
        config["random"] = o.random_count;
        config["seed"] = o.seed;
    }

    const auto [shifted, report] = shift_full(g, input);
    const bool pass = report.output_size == report.input_size && report.is_shifted &&
                      report.l_intersecting && is_intersecting(shifted);
    Json result{{"report", to_json(report)}, {"family", family_to_json(shifted)}};
    std::ostringstream text;
    text << shift_text(report);
    if (o.members)
        for (const auto& m : shifted.members()) text << '\n' << "  " << set_names(g, m);
    return finish(o, "shift", config, result, pass, text.str());
}

int run_cyclebound(const Options& o) {
    Json config{{"n", o.n}, {"t", o.t}, {"u", o.u}, {"sigma", o.sigma_mode},
                {"samples", o.samples}, {"seed", o.seed}};
    std::vector<GoodPermutation> sigmas;
    if (o.sigma_mode == "identity") {
        sigmas.push_back(GoodPermutation::identity(o.n));
    } else {
        Rng rng(o.seed);
        for (int i = 0; i < o.samples; ++i) sigmas.push_back(random_good(o.n, rng));
    }
    const auto reports = verify_cycle_bound_many(o.n, o.t, o.u, sigmas, o.threads);
    bool pass = true;
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& rep : reports) {
        pass = pass && rep.pass;
        rows.push_back(to_json(rep));
        text << cycle_bound_text(rep) << '\n';
    }
    Json result{{"reports", rows}, {"all_pass", pass}};
    if (o.members) {
        const Graph g = build_p3_union(o.n);
        const CycleFamily fam = build_cycle_family(sigmas.front(), o.t, o.u);
        result["family"] = to_json(fam);
        text << cycle_family_text(g, fam);
    }
    return finish(o, "cyclebound", config, result, pass, text.str());
}

int run_sample(const Options& o) {
    const Graph g = build_p3_union(o.n);
    Json config{{"n", o.n}, {"r", o.r}, {"s", o.s}, {"samples", o.samples}, {"seed", o.seed}};
    const PatternFamily pf = build_pattern_family(o.n, o.r, o.s);
    Rng rng(o.seed);
    std::map<VertexSet, long long> counts;
    bool in_stratum = true;
    for (int i = 0; i < o.samples; ++i) {
        const VertexSet draw = sample_independent_set(g, pf, rng);
        ++counts[draw];
        if (draw.count() != o.r || !is_independent(g, draw) ||
            static_cast<int>((draw & g.centres).count()) != o.s)
            in_stratum = false;
    }
    Json sets = Json::array();
    for (const auto& [set, count] : counts)
        sets.push_back(Json{{"set", set_to_json(set)}, {"count", count}});
    Json result{{"draws", o.samples},
                {"distinct", counts.size()},
                {"stratum_size", stratum_count(o.n, o.r, o.s).get_str()},
                {"in_stratum", in_stratum},
                {"patterns", to_json(pf)},
                {"sets", sets}};
    std::ostringstream text;
    text << o.samples << " draws from stratum (n, r, s) = (" << o.n << ", " << o.r << ", " << o.s
         << "): " << counts.size() << " distinct sets of " << stratum_count(o.n, o.r, o.s).get_str()
         << ", all in stratum " << (in_stratum ? "yes" : "NO");
    if (o.members)
        for (const auto& [set, count] : counts)
            text << '\n' << "  " << set_names(g, set) << "  " << count;
    return finish(o, "sample", config, result, in_stratum, text.str());
}

int run_distribution(const Options& o) {
    const Graph g = build_p3_union(o.n);
    Json config{{"n", o.n}, {"r", o.r}, {"s", o.s}, {"threads", o.threads}};
    const ExactDistribution dist = exact_distribution(g, o.r, o.s, o.threads);
    return finish(o, "distribution", config, to_json(dist), dist.uniform,
                  distribution_text(dist));
}

int run_pointwise(const Options& o) {
    const Graph g = build_p3_union(o.n);
    VertexSet k;
    for (const int id : o.set_ids) {
        if (id < 1) throw std::invalid_argument("vertex ids are 1-based");
        k.set(id - 1);
    }
    Json config{{"n", o.n}, {"r", o.r}, {"s", o.s}, {"set", set_to_json(k)}};
    const IntermediateProbability p = intermediate_probability_check(g, o.r, o.s, k);
    std::ostringstream text;
    text << "K = " << set_names(g, k) << " (type " << type_name(p.type) << ", k1=" << p.k1
         << ", k2=" << p.k2 << ")\n"
         << "  leaf stage: " << rat_str(p.leaf_prob) << " (closed form "
         << rat_str(p.leaf_prob_closed) << ")\n"
         << "  centre stage: " << rat_str(p.centre_prob_cond) << " (closed form "
         << rat_str(p.centre_prob_closed) << ")\n"
         << "  point mass: " << rat_str(p.point_prob) << " (uniform "
         << rat_str(p.expected_point_prob) << ")\n"
         << "  shift independent " << (p.shift_independent ? "yes" : "NO") << " -> "
         << (p.pass ? "pass" : "FAIL");
    return finish(o, "pointwise", config, to_json(p), p.pass, text.str());
}

int run_ekr(const Options& o) {
    const Graph g = o.graph();
    Json config = graph_config(o);
    config["r"] = o.r;
    config["mode"] = o.mode;
    const SearchMode mode = o.mode == "reduced" ? SearchMode::ShiftedReduced : SearchMode::Full;
    const EkrVerdict verdict = verify_ekr(g, o.r, mode, o.budget());
    return finish(o, "ekr", config, to_json(verdict), verdict.is_ekr, ekr_text(g, verdict));
}

ScanKind parse_scan_kind(const std::string& token) {
    if (token == "paths") return ScanKind{GraphKind::P3Union, 2};
    if (token.rfind("claws:", 0) == 0) {
        const int k = std::stoi(token.substr(6));
        return ScanKind{GraphKind::KClawUnion, k};
    }
    throw std::invalid_argument("unknown scan kind '" + token + "' (use paths or claws:<k>)");
}

int run_scan(const Options& o) {
    std::vector<ScanKind> kinds;
    for (const auto& token : o.kinds) kinds.push_back(parse_scan_kind(token));
    Json config{{"max_n", o.max_n}, {"max_r", o.max_r}, {"kinds", o.kinds}};
    const auto rows = scan_conjectures(o.max_n, o.max_r, kinds, o.budget());
    // Rows with r > n sit outside the conjectured range; a non-EKR verdict
    // there is a finding, not a failure.
    bool pass = true;
    Json out_rows = Json::array();
    for (const auto& row : rows) {
        if (row.status == "error" || (row.status == "ok" && !row.is_ekr && row.r <= row.n))
            pass = false;
        out_rows.push_back(to_json(row));
    }
    Json result{{"rows", out_rows}, {"all_pass", pass}};
    if (o.format == "csv") {
        emit(o, scan_csv(rows));
        return pass ? exit_pass : exit_fail;
    }
    return finish(o, "scan", config, result, pass, scan_text(rows));
}

int run_chvatal(const Options& o) {
    const Graph g = o.graph();
    Json config = graph_config(o);
    config["r"] = o.r;
    const ChvatalVerdict verdict = verify_chvatal_for_bounded_independents(g, o.r, o.budget());
    return finish(o, "chvatal", config, to_json(verdict), verdict.star_maximal,
                  chvatal_text(g, verdict));
}

void add_common(CLI::App* sub, Options& o, bool with_csv = false) {
    const std::vector<std::string> formats =
        with_csv ? std::vector<std::string>{"json", "text", "csv"}
                 : std::vector<std::string>{"json", "text"};
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--out", o.out, "output file (default stdout; relative paths join "
                                    "$EKRTOOL_OUT_DIR when set)");
}

void add_graph(CLI::App* sub, Options& o, bool claws_allowed = true) {
    if (claws_allowed)
        sub->add_option("--kind", o.kind, "graph kind")
            ->check(CLI::IsMember({"paths", "claws"}))
            ->capture_default_str();
    sub->add_option("-n,--components", o.n, "number of components")->required();
    if (claws_allowed)
        sub->add_option("-k,--claw", o.k, "leaves per claw (claws only)")->capture_default_str();
}

void add_budget(CLI::App* sub, Options& o) {
    sub->add_option("--budget-members", o.budget_members, "family size cap for exact search")
        ->capture_default_str();
    sub->add_option("--budget-nodes", o.budget_nodes, "search tree node cap")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for intersecting families of independent sets"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Options o;
    std::function<int(const Options&)> run;

    auto* enumerate = app.add_subcommand("enumerate", "count independent sets, strata, stars");
    add_graph(enumerate, o);
    enumerate->add_option("-r,--size", o.r, "set size")->required();
    auto* stratum_opt =
        enumerate->add_option("--stratum", o.stratum, "restrict to exactly s centres");
    enumerate->add_option("--star", o.star_vertex, "restrict to sets through this 1-based vertex")
        ->excludes(stratum_opt);
    enumerate->add_flag("--members", o.members, "list the sets");
    add_common(enumerate, o);
    enumerate->callback([&] { run = run_enumerate; });

    auto* shift = app.add_subcommand("shift", "compress an intersecting family to a fixpoint");
    add_graph(shift, o);
    shift->add_option("-r,--size", o.r, "set size")->required();
    auto* in_opt = shift->add_option("--in", o.in_file, "family JSON file");
    shift->add_option("--random", o.random_count,
                      "random intersecting family instead (0 = maximal)")
        ->excludes(in_opt);
    shift->add_option("--seed", o.seed, "random seed")->capture_default_str();
    shift->add_flag("--members", o.members, "list the shifted family");
    add_common(shift, o);
    shift->callback([&] { run = run_shift; });

    auto* cyclebound = app.add_subcommand("cyclebound", "interval families on the leaf circle");
    cyclebound->add_option("-n,--components", o.n, "number of paths")->required();
    cyclebound->add_option("-t", o.t, "first interval length")->required();
    cyclebound->add_option("-u", o.u, "second interval length")->capture_default_str();
    cyclebound->add_option("--sigma", o.sigma_mode, "arrangement source")
        ->check(CLI::IsMember({"identity", "random"}))
        ->capture_default_str();
    cyclebound->add_option("--samples", o.samples, "random arrangements to check")
        ->capture_default_str();
    cyclebound->add_option("--seed", o.seed, "random seed")->capture_default_str();
    cyclebound->add_option("--threads", o.threads, "worker threads")->capture_default_str();
    cyclebound->add_flag("--members", o.members, "include the first arrangement's family");
    add_common(cyclebound, o);
    cyclebound->callback([&] { run = run_cyclebound; });

    auto* sample = app.add_subcommand("sample", "draw stratum-uniform independent sets");
    sample->add_option("-n,--components", o.n, "number of paths")->required();
    sample->add_option("-r,--size", o.r, "set size")->required();
    sample->add_option("-s,--stratum", o.s, "centre count")->required();
    sample->add_option("--samples", o.samples, "number of draws")->capture_default_str();
    sample->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sample->add_flag("--members", o.members, "list observed sets with counts");
    add_common(sample, o);
    sample->callback([&] { run = run_sample; });

    auto* distribution =
        app.add_subcommand("distribution", "exact sampling distribution (n <= 3)");
    distribution->add_option("-n,--components", o.n, "number of paths")->required();
    distribution->add_option("-r,--size", o.r, "set size")->required();
    distribution->add_option("-s,--stratum", o.s, "centre count")->required();
    distribution->add_option("--threads", o.threads, "worker threads")->capture_default_str();
    add_common(distribution, o);
    distribution->callback([&] { run = run_distribution; });

    auto* pointwise =
        app.add_subcommand("pointwise", "stagewise probabilities of one stratum set (n <= 3)");
    pointwise->add_option("-n,--components", o.n, "number of paths")->required();
    pointwise->add_option("-r,--size", o.r, "set size")->required();
    pointwise->add_option("-s,--stratum", o.s, "centre count")->required();
    pointwise->add_option("--set", o.set_ids, "1-based vertex ids of the target set")
        ->required()
        ->delimiter(',');
    add_common(pointwise, o);
    pointwise->callback([&] { run = run_pointwise; });

    auto* ekr = app.add_subcommand("ekr", "maximum intersecting family vs the best star");
    add_graph(ekr, o);
    ekr->add_option("-r,--size", o.r, "set size")->required();
    ekr->add_option("--mode", o.mode, "search space")
        ->check(CLI::IsMember({"full", "reduced"}))
        ->capture_default_str();
    add_budget(ekr, o);
    add_common(ekr, o);
    ekr->callback([&] { run = run_ekr; });

    auto* scan = app.add_subcommand("scan", "verdict table over a parameter range");
    scan->add_option("--max-n", o.max_n, "largest component count")->capture_default_str();
    scan->add_option("--max-r", o.max_r, "largest set size")->capture_default_str();
    scan->add_option("--kinds", o.kinds, "graph kinds (paths, claws:<k>)")
        ->capture_default_str()
        ->delimiter(',');
    add_budget(scan, o);
    add_common(scan, o, /*with_csv=*/true);
    scan->callback([&] { run = run_scan; });

    auto* chvatal =
        app.add_subcommand("chvatal", "stars in the hereditary family of sets of size <= r");
    add_graph(chvatal, o);
    chvatal->add_option("-r,--size", o.r, "size cap")->required();
    add_budget(chvatal, o);
    add_common(chvatal, o);
    chvatal->callback([&] { run = run_chvatal; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        return run(o);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    }
}
