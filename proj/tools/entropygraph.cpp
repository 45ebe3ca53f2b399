#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <entropygraph/checks.hpp>
#include <entropygraph/degseq.hpp>
#include <entropygraph/entropy.hpp>
#include <entropygraph/errors.hpp>
#include <entropygraph/graphs.hpp>
#include <entropygraph/io.hpp>
#include <entropygraph/rounding.hpp>
#include <entropygraph/stats.hpp>
#include <entropygraph/trees.hpp>

#ifndef ENTROPYGRAPH_VERSION
#define ENTROPYGRAPH_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace entropygraph;

namespace {

// Collects emitted artifacts.  Without an output directory the single main
// artifact goes to stdout and nothing is written.
class Output {
public:
    std::optional<fs::path> dir;

    void emit(const std::string& name, const std::string& bytes, bool main = true) {
        if (dir) {
            io::write_file(*dir / name, bytes);
            files_.push_back({name, bytes});
        } else if (main) {
            std::cout << bytes;
        }
    }

    void manifest(const std::string& command, const json& config, double seconds) const {
        if (!dir)
            return;
        json m;
        m["tool"] = "entropygraph";
        m["version"] = ENTROPYGRAPH_VERSION;
        m["command"] = command;
        m["config"] = config;
        m["wall_time_seconds"] = seconds;
        m["files"] = json::array();
        for (const auto& [name, bytes] : files_)
            m["files"].push_back({{"path", name}, {"bytes", bytes.size()}, {"sha256", io::sha256_hex(bytes)}});
        io::write_file(*dir / "manifest.json", m.dump(2) + "\n");
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

std::string num(double x) {
    return io::format_double(x);
}

DegreeSequence load_degrees(const std::string& path) {
    return DegreeSequence(io::read_degrees(path));
}

// Graph on sorted positions -> graph on the caller's vertex order.
SimpleGraph to_original(const SimpleGraph& g, const DegreeSequence& d) {
    SimpleGraph out(g.vertex_count());
    const auto& orig = d.original_index();
    for (auto [u, v] : g.edges())
        out.add_edge(orig[u], orig[v]);
    return out;
}

// Bipartite graph on sorted row/column positions -> the files' row/column order.
SimpleGraph to_original(const SimpleGraph& g, const DegreeSequence& rows, const DegreeSequence& cols) {
    SimpleGraph out(g.vertex_count());
    const int n1 = rows.size();
    auto map = [&](int v) { return v < n1 ? rows.original_index()[v] : n1 + cols.original_index()[v - n1]; };
    for (auto [u, v] : g.edges())
        out.add_edge(map(u), map(v));
    return out;
}

json config_of(const CLI::App* sub) {
    json c = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name.empty())
            continue;
        if (opt->get_type_size() == 0) {
            c[name] = opt->count() > 0;
            continue;
        }
        const auto& res = opt->results();
        if (!res.empty())
            c[name] = res.size() == 1 && opt->get_items_expected_max() <= 1 ? json(res.front()) : json(res);
        else
            c[name] = opt->get_default_str();
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropygraph: max-entropy degree models, tree statistics, samplers and rounding"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ENTROPYGRAPH_VERSION);
    app.option_defaults()->always_capture_default();

    std::string out_dir;
    std::uint64_t seed = 1;
    std::string degrees_path, graph_path, cols_path, weights_path;
    int k = 3;
    double a = 0.6;
    auto add_out = [&](CLI::App* s) { s->add_option("--out", out_dir, "output directory (default: stdout only)"); };

    // solve
    SolverOptions solver;
    auto* solve = app.add_subcommand("solve", "max-entropy edge model of a degree sequence");
    solve->add_option("--degrees", degrees_path, "degree file")->required()->check(CLI::ExistingFile);
    solve->add_option("--tol", solver.tol);
    solve->add_option("--max-iter", solver.max_iter);
    add_out(solve);

    // check
    bool strict = false;
    auto* check = app.add_subcommand("check", "Erdős–Gallai verdict");
    check->add_option("--degrees", degrees_path, "degree file")->required()->check(CLI::ExistingFile);
    check->add_flag("--strict", strict, "report the strict verdict");
    add_out(check);

    // trees
    auto* trees = app.add_subcommand("trees", "labelled trees and embedding sums");
    trees->require_subcommand(1);
    auto* trees_enum = trees->add_subcommand("enumerate", "all k^(k-2) trees as edge lists");
    trees_enum->add_option("--k", k)->required();
    add_out(trees_enum);
    std::uint64_t budget = kDefaultEmbeddingBudget;
    auto* trees_fsum = trees->add_subcommand("fsum", "F(T,G) for every tree on k vertices");
    trees_fsum->add_option("--graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
    trees_fsum->add_option("--k", k)->required();
    trees_fsum->add_option("--budget", budget);
    add_out(trees_fsum);

    // sample
    std::string method = "switch_mcmc";
    std::int64_t count = 1, burn_in = 0, thinning = 0;
    auto* sample = app.add_subcommand("sample", "uniform graphs with given or almost-given degrees");
    sample->add_option("--degrees", degrees_path, "degree file (rows when --cols is given)")
        ->required()
        ->check(CLI::ExistingFile);
    sample->add_option("--cols", cols_path, "column degrees: bipartite sampling")->check(CLI::ExistingFile);
    sample->add_option("--method", method,
                       "exact_enum, switch_mcmc, toggle_mcmc, rejection or reweighted_rejection");
    sample->add_option("--a", a, "almost-given exponent (toggle_mcmc, rejection, reweighted_rejection)");
    sample->add_option("--seed", seed);
    sample->add_option("--count", count)->check(CLI::PositiveNumber);
    sample->add_option("--burn-in", burn_in, "0 selects 10 n^2");
    sample->add_option("--thinning", thinning, "0 selects n^2");
    sample->add_option("--out", out_dir, "output directory")->required();

    // stats
    std::string statistic = "L_g", mode = "exact_tiny";
    LOptions lopt;
    auto* stats = app.add_subcommand("stats", "weighted L statistic");
    stats->add_option("--degrees", degrees_path, "degree file (rows for L_b)")->required()->check(CLI::ExistingFile);
    stats->add_option("--cols", cols_path, "column degrees for L_b")->check(CLI::ExistingFile);
    stats->add_option("--statistic", statistic, "L_a, L_g, L_q or L_b");
    stats->add_option("--k", k);
    stats->add_option("--mode", mode, "exact_tiny or monte_carlo");
    stats->add_option("--a", lopt.a);
    stats->add_option("--seed", lopt.seed);
    stats->add_option("--budget", lopt.budget);
    stats->add_option("--graphs", lopt.graphs);
    stats->add_option("--placements", lopt.placements_per_tree);
    add_out(stats);

    // concentrate
    std::string family = "edges";
    int n = 20;
    double p = 0.3;
    std::vector<double> eps{0.1, 0.3, 0.5};
    std::int64_t reps = 100000;
    auto* conc = app.add_subcommand("concentrate", "lower-tail bound against the empirical tail");
    conc->add_option("--family", family, "edges (K_n under G(n,p)) or trees (placed k-trees under the tilde model)");
    conc->add_option("--n", n);
    conc->add_option("--p", p);
    conc->add_option("--degrees", degrees_path, "degree file for --family trees")->check(CLI::ExistingFile);
    conc->add_option("--k", k);
    conc->add_option("--epsilon", eps)->expected(1, -1);
    conc->add_option("--reps", reps);
    conc->add_option("--seed", seed);
    add_out(conc);

    // round
    auto* round = app.add_subcommand("round", "round a weighted bipartite graph to a 0-1 graph");
    round->add_option("--weights", weights_path, "weighted bipartite file")->required()->check(CLI::ExistingFile);
    add_out(round);

    // pipeline
    std::optional<double> alpha;
    PipelineOptions popt;
    auto* pipe = app.add_subcommand("pipeline", "lower-bound construction and membership frequencies");
    pipe->add_option("--degrees", degrees_path, "degree file")->required()->check(CLI::ExistingFile);
    pipe->add_option("--a", a);
    pipe->add_option("--alpha", alpha, "small-degree exponent (default 10/(a-1/2))");
    pipe->add_option("--reps", popt.reps);
    pipe->add_option("--seed", popt.seed);
    add_out(pipe);

    // reproduce
    std::uint64_t check_seed = checks::kDefaultSeed;
    std::vector<int> only;
    auto* repro = app.add_subcommand("reproduce", "run every acceptance check, CSV verdicts");
    repro->add_option("--seed", check_seed);
    repro->add_option("--only", only);
    add_out(repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    CLI::App* leaf = app.get_subcommands().front();
    std::string command = leaf->get_name();
    if (leaf == trees) {
        leaf = trees->get_subcommands().front();
        command += " " + leaf->get_name();
    }
    Output out;
    if (!out_dir.empty())
        out.dir = fs::path(out_dir);
    const auto start = std::chrono::steady_clock::now();
    int status = 0;

    try {
        if (leaf == solve) {
            const auto d = load_degrees(degrees_path);
            const auto sol = solve_max_entropy(d, solver);
            json j;
            j["r"] = d.to_original_order<double>(sol.r);
            j["h1"] = sol.h1;
            j["residual"] = sol.max_residual();
            j["iterations"] = sol.iterations;
            j["converged"] = sol.converged;
            out.emit("solve.json", dump(j));
        } else if (leaf == check) {
            const auto raw = io::read_degrees(degrees_path);
            const DegreeSequence d(raw);
            const auto rep = check_erdos_gallai(d);
            json j;
            j["strict"] = strict;
            j["pass"] = strict ? rep.strict_pass : rep.nonstrict_pass;
            j["strict_pass"] = rep.strict_pass;
            j["nonstrict_pass"] = rep.nonstrict_pass;
            j["m_even"] = d.total() % 2 == 0;
            j["graphical"] = is_graphical(raw);
            json margins = json::array();
            for (const auto& m : rep.margins)
                margins.push_back({m.lhs, m.rhs});
            j["margins"] = margins;
            out.emit("check.json", dump(j));
        } else if (leaf == trees_enum) {
            std::string text;
            int id = 0;
            for (const auto& t : enumerate_trees(k)) {
                text += "# tree " + std::to_string(++id) + "\n";
                for (auto [u, v] : t.edges())
                    text += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
            }
            out.emit("trees.txt", text);
        } else if (leaf == trees_fsum) {
            const auto file = io::read_edge_list(graph_path);
            const auto deg = file.graph.degrees();
            std::string csv = "tree_id,F\n";
            int id = 0;
            for (const auto& t : enumerate_trees(k))
                csv += std::to_string(++id) + "," + num(weighted_embedding_sum(t, file.graph, deg, budget)) + "\n";
            out.emit("fsum.csv", csv);
        } else if (leaf == sample) {
            const auto m = parse_sampler_method(method);
            const DegreeSequence d = load_degrees(degrees_path);
            const SamplerConfig cfg{seed, m, burn_in, thinning};
            SampleBatch batch;
            std::optional<std::pair<int, int>> bip;
            std::optional<DegreeSequence> cols;
            if (!cols_path.empty()) {
                cols = load_degrees(cols_path);
                batch = sample_bipartite_uniform(d, *cols, cfg, count);
                bip = std::pair{d.size(), cols->size()};
            } else if (m == SamplerMethod::exact_enum || m == SamplerMethod::switch_mcmc) {
                batch = sample_uniform_gd(d, cfg, count);
            } else {
                batch = sample_uniform_ga(d, a, cfg, count);
            }
            std::vector<std::string> names;
            for (std::size_t i = 0; i < batch.graphs.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "graph_%05zu.txt", i + 1);
                const SimpleGraph g = bip ? to_original(batch.graphs[i], d, *cols) : to_original(batch.graphs[i], d);
                out.emit(name, io::format_edge_list(g, bip), false);
                names.push_back(name);
            }
            json j;
            j["seed"] = seed;
            j["method"] = to_string(m);
            j["count"] = count;
            j["burn_in"] = batch.burn_in;
            j["thinning"] = batch.thinning;
            j["proposed"] = batch.stats.proposed;
            j["accepted"] = batch.stats.accepted;
            j["acceptance_rate"] = batch.stats.acceptance_rate();
            j["warnings"] = batch.warnings;
            j["graphs"] = names;
            out.emit("sample.json", dump(j));
        } else if (leaf == stats) {
            const auto which = parse_l_statistic(statistic);
            const auto md = parse_l_mode(mode);
            const DegreeSequence d = load_degrees(degrees_path);
            LReport rep;
            if (which == LStatistic::L_b) {
                if (cols_path.empty())
                    throw ValidationError("L_b needs --cols");
                rep = weighted_l_statistic_bipartite(d, load_degrees(cols_path), k, md, lopt);
            } else {
                rep = weighted_l_statistic(which, d, k, md, lopt);
            }
            std::string csv = "statistic,k,n,M,value,stderr,mode,seed\n";
            csv += to_string(rep.which) + "," + std::to_string(rep.k) + "," + std::to_string(rep.n) + "," +
                   std::to_string(rep.m) + "," + num(rep.value) + "," + num(rep.standard_error) + "," +
                   to_string(rep.mode) + "," + std::to_string(lopt.seed) + "\n";
            if (!rep.note.empty())
                std::cerr << "note: " << rep.note << "\n";
            out.emit("stats.csv", csv);
        } else if (leaf == conc) {
            ConcentrationFamily fam;
            std::optional<BernoulliModel> model;
            if (family == "edges") {
                fam = edge_count_family(n);
                model = BernoulliModel::uniform(n, p);
            } else if (family == "trees") {
                if (degrees_path.empty())
                    throw ValidationError("--family trees needs --degrees");
                const DegreeSequence d = load_degrees(degrees_path);
                const std::vector<int> deg(d.degrees().begin(), d.degrees().end());
                fam = tree_family(deg, k);
                model = BernoulliModel::from_solution(solve_max_entropy(d));
            } else {
                throw ValidationError("unknown family '" + family + "'");
            }
            std::string csv = "lambda,delta1,delta2,epsilon,bound,empirical,pass\n";
            for (std::size_t i = 0; i < eps.size(); ++i) {
                const auto r = empirical_lower_tail(fam, *model, eps[i], reps, derive_seed(seed, i));
                csv += num(r.params.lambda) + "," + num(r.params.delta1) + "," + num(r.params.delta2) + "," +
                       num(r.epsilon) + "," + num(r.bound) + "," + num(r.frequency) + "," +
                       (r.pass() ? "true" : "false") + "\n";
            }
            out.emit("concentrate.csv", csv);
        } else if (leaf == round) {
            const auto w = io::read_weighted_bipartite(weights_path);
            const auto r = round_to_integral(w);
            int n1 = 0;
            for (int part : w.part_of())
                n1 += part == 0;
            json trace = json::array();
            for (const auto& step : r.trace) {
                json s;
                s["kind"] = to_string(step.kind);
                std::vector<int> walk;
                for (int v : step.walk)
                    walk.push_back(v + 1);
                s["walk"] = walk;
                s["c"] = step.c;
                json killed = json::array();
                for (auto [u, v] : step.killed)
                    killed.push_back({u + 1, v + 1});
                s["killed"] = killed;
                trace.push_back(s);
            }
            json j;
            j["support_size"] = r.support_size;
            j["steps"] = r.trace.size();
            j["violations"] = rounding_violations(r);
            j["trace"] = trace;
            out.emit("rounded.txt", io::format_edge_list(r.graph, std::pair{n1, w.vertex_count() - n1}),
                     !out.dir.has_value());
            out.emit("round_trace.json", dump(j), false);
        } else if (leaf == pipe) {
            const DegreeSequence d = load_degrees(degrees_path);
            popt.alpha = alpha;
            const auto r = lower_bound_pipeline(d, a, popt);
            json j;
            j["n"] = r.n;
            j["a"] = r.a;
            j["alpha"] = r.alpha;
            j["set_a_size"] = r.set_a.size();
            j["crossing_edges"] = r.crossing_edges;
            j["rounding_violations"] = r.rounding_violations;
            j["reps"] = r.reps;
            j["seed"] = popt.seed;
            j["membership"] = r.membership;
            j["membership_slack"] = r.membership_slack;
            j["all_events"] = r.all_events;
            j["j_size"] = r.j_size;
            j["e_checked"] = r.e_checked;
            j["e_below_bound"] = r.e_below_bound;
            j["min_f_frequency"] = r.min_f_frequency;
            j["max_d_j_a"] = r.max_d_j_a;
            j["d_j_a_below_quarter"] = r.d_j_a_below_quarter;
            out.emit("pipeline.json", dump(j));
        } else if (leaf == repro) {
            if (only.empty())
                only = checks::check_ids();
            std::vector<checks::CheckResult> results;
            for (int id : only) {
                results.push_back(checks::run_check(id, check_seed));
                std::cerr << checks::format_line(results.back()) << "\n";
                if (!results.back().pass && !results.back().soft)
                    status = 1;
            }
            out.emit("reproduce.csv", checks::to_csv(results));
        }
    } catch (const Error& e) {
        std::cerr << "entropygraph: " << e.kind() << ": " << e.what() << "\n";
        if (out.dir) {
            json j;
            j["error"] = e.kind();
            j["message"] = e.what();
            j["exit_code"] = e.exit_code();
            if (const auto* nc = dynamic_cast<const NonConvergence*>(&e)) {
                j["iterations"] = nc->iterations();
                j["residuals"] = nc->residuals();
            }
            out.emit("error.json", dump(j), false);
        }
        status = e.exit_code();
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.manifest(command, config_of(leaf), seconds);
    return status;
}
