// Command-line harness: graph generation, exact solving, constructive
// algorithms, bound tables, the f(n,2) verification suite, and seeded
// Monte Carlo sweeps. Every run is fully determined by --seed; repeated
// invocations with the same flags produce byte-identical output at any
// --threads level.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bihole/bounds.hpp"
#include "bihole/certificate.hpp"
#include "bihole/constructive.hpp"
#include "bihole/exact.hpp"
#include "bihole/generators.hpp"
#include "bihole/graph_io.hpp"
#include "bihole/rng.hpp"

using json = nlohmann::ordered_json;
using namespace bihole;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalOptions {
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    int threads = 1;
};

void emit_text(const GlobalOptions& opts, const std::string& text) {
    if (opts.out.empty() || opts.out == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(opts.out);
        if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
        f << text;
        if (text.empty() || text.back() != '\n') f << '\n';
    }
}

void emit_json(const GlobalOptions& opts, const json& doc) { emit_text(opts, doc.dump()); }

json certificate_json(const BiHoleCertificate& cert) {
    return json{{"x", cert.x_set}, {"y", cert.y_set}};
}

BipartiteGraph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    return read_graph_file(path);
}

// Run fn(trial) for trial in [0, trials) across the requested thread count.
// Results must be written into per-index slots so that aggregation is
// independent of scheduling.
void parallel_trials(int trials, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, trials == 0 ? 1 : trials));
    if (threads == 1) {
        for (int t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= trials) return;
                fn(t);
            }
        });
    for (auto& th : pool) th.join();
}

std::string format_double(double v, int decimals) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    os << v;
    return os.str();
}

// Unconditional f(n, delta) lower bound for a realized degree cap.
long long degree_guarantee(int n, int delta) {
    if (delta <= 1) return n / 2;
    return (n - 2) / delta;
}

// Random A-degree-<=2 instance: each A-vertex picks degree in {0,1,2}
// uniformly, then uniform distinct neighbors.
BipartiteGraph random_maxdeg2_graph(int n, RandomEngine& rng) {
    BipartiteGraph g(n, n);
    for (int a = 0; a < n; ++a) {
        const int d = static_cast<int>(rng.uniform_below(3));
        for (int b : rng.sample_sorted(n, std::min(d, n))) g.add_edge(a, b);
    }
    return g;
}

int cmd_gen(const GlobalOptions& opts, const std::string& kind, int n, int delta, int t,
            double c, int max_rejects) {
    RandomEngine rng(opts.seed);
    json meta;
    meta["schema"] = kSchemaVersion;
    meta["command"] = "gen";
    meta["kind"] = kind;
    meta["n"] = n;
    meta["seed"] = std::to_string(opts.seed);

    std::optional<BipartiteGraph> graph;
    if (kind == "cycle") {
        graph = even_cycle(n);
    } else if (kind == "binomial") {
        if (delta <= 0) throw CLI::ValidationError("gen", "--delta required for binomial");
        meta["delta"] = delta;
        meta["p"] = static_cast<double>(delta) / n;
        graph = random_binomial_bipartite(n, n, static_cast<double>(delta) / n, rng);
    } else if (kind == "pairing") {
        if (delta <= 0) throw CLI::ValidationError("gen", "--delta required for pairing");
        meta["delta"] = delta;
        PairingResult pr = pairing_model(n, delta, rng, max_rejects);
        meta["rejections"] = pr.rejections;
        graph = std::move(pr.graph);
    } else if (kind == "kttfree") {
        if (t < 2) throw CLI::ValidationError("gen", "--t >= 2 required for kttfree");
        meta["t"] = t;
        meta["c"] = c;
        KttFreeResult kr = ktt_free_construction(n, t, c, rng);
        meta["resamples"] = kr.report.resamples;
        meta["repair_report"] = {{"copies_before", kr.report.copies_before},
                                 {"edges_removed", kr.report.edges_removed},
                                 {"min_degree_after", kr.report.min_degree_after},
                                 {"p", kr.report.p}};
        graph = std::move(kr.graph);
    } else {
        throw CLI::ValidationError("gen", "unknown --kind " + kind);
    }

    if (!graph) {
        meta["error"] = "generation failed";
        std::cerr << meta.dump() << '\n';
        return 1;
    }
    emit_text(opts, write_graph_text(*graph));
    if (!opts.out.empty() && opts.out != "-") {
        std::ofstream f(opts.out + ".meta.json");
        f << meta.dump() << '\n';
    }
    return 0;
}

int cmd_solve(const GlobalOptions& opts, const std::string& path,
              std::optional<std::uint64_t> budget) {
    const BipartiteGraph g = load_graph(path);
    const SolveResult result = max_bihole(g, budget);
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "solve";
    doc["k"] = result.k;
    doc["certificate"] = certificate_json(result.certificate);
    doc["nodes_explored"] = result.nodes_explored;
    doc["optimal"] = result.optimal;
    doc["verified"] = verify_bihole(g, result.certificate);
    emit_json(opts, doc);
    return doc["verified"].get<bool>() ? 0 : 1;
}

json trace_json(const ReductionTrace& trace) {
    json levels = json::array();
    for (const auto& level : trace.levels)
        levels.push_back({{"delta", level.delta},
                          {"s_set", level.s_set},
                          {"neighborhood_size", level.neighborhood_size},
                          {"surviving_size", level.surviving_size},
                          {"retries_used", level.retries_used}});
    return json{{"levels", levels},
                {"terminal_delta", trace.terminal_delta},
                {"terminal_size", trace.terminal_size}};
}

int cmd_construct(const GlobalOptions& opts, const std::string& path,
                  const std::string& algorithm, int delta_flag, double eps,
                  std::optional<int> t, int retries) {
    const BipartiteGraph g = load_graph(path);
    const int n = g.size_a();
    const int delta = delta_flag > 0 ? delta_flag : g.max_degree_a();
    RandomEngine rng(opts.seed);

    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "construct";
    doc["algorithm"] = algorithm;
    doc["n"] = n;
    doc["seed"] = std::to_string(opts.seed);

    std::optional<BiHoleCertificate> cert;
    long long guarantee = 0;
    if (algorithm == "maxdeg2") {
        guarantee = (n + 1) / 2 - 1;
        cert = bihole_maxdeg2(g);
    } else if (algorithm == "general-delta") {
        doc["delta"] = delta;
        guarantee = degree_guarantee(n, delta);
        cert = bihole_general_delta(g, delta);
    } else if (algorithm == "xi-chain") {
        doc["delta"] = delta;
        guarantee = xi_chain_guarantee(n, delta);
        XiChainResult r = bihole_xi_chain(g, delta, rng, retries);
        doc["trace"] = trace_json(r.trace);
        cert = std::move(r.certificate);
    } else if (algorithm == "random-subset") {
        doc["delta"] = delta;
        const double x = 0.5 * std::log(static_cast<double>(delta)) / delta;
        guarantee = static_cast<long long>(std::floor(x * n));
        RandomSubsetResult r = bihole_random_subset(g, delta, rng, retries);
        doc["retries_used"] = r.retries_used;
        doc["t_sizes"] = r.t_sizes;
        cert = std::move(r.certificate);
    } else if (algorithm == "dense-regime") {
        doc["eps"] = eps;
        DenseRegimeResult r = bihole_dense_regime(g, eps, t);
        doc["requested_t"] = r.requested_t;
        doc["achieved_t"] = r.achieved_t;
        guarantee = 0;  // no sharp constant is asserted in this regime
        cert = std::move(r.certificate);
    } else {
        throw CLI::ValidationError("construct", "unknown --algorithm " + algorithm);
    }

    doc["guarantee"] = guarantee;
    if (!cert) {
        doc["success"] = false;
        emit_json(opts, doc);
        return 1;
    }
    const bool verified = verify_bihole(g, *cert);
    doc["success"] = true;
    doc["achieved"] = cert->size();
    doc["verified"] = verified;
    doc["certificate"] = certificate_json(*cert);
    emit_json(opts, doc);
    return (verified && cert->size() >= guarantee) ? 0 : 1;
}

int cmd_bounds_table(const GlobalOptions& opts, int delta_min, int delta_max) {
    const auto rows = bounds_table(delta_min, delta_max);
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "delta,lower,upper\n";
        for (const auto& row : rows)
            os << row.delta << ',' << format_double(row.lower, 5) << ','
               << format_double(row.upper, 4) << '\n';
        emit_text(opts, os.str());
    } else {
        json doc;
        doc["schema"] = kSchemaVersion;
        doc["command"] = "bounds table";
        json jrows = json::array();
        for (const auto& row : rows)
            jrows.push_back({{"delta", row.delta}, {"lower", row.lower}, {"upper", row.upper}});
        doc["rows"] = jrows;
        emit_json(opts, doc);
    }
    return 0;
}

int cmd_bounds_h(const GlobalOptions& opts, long long n, int delta) {
    const HEvaluation eval = check_h_inequality(n, delta);
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "bounds h";
    doc["n"] = eval.n;
    doc["delta"] = eval.delta;
    doc["x"] = eval.x;
    doc["h"] = eval.h_double;
    doc["h_exact"] = eval.h.get_str();
    doc["rhs"] = eval.rhs;
    doc["holds"] = eval.holds;
    emit_json(opts, doc);
    return 0;
}

int cmd_bounds_beta(const GlobalOptions& opts, int delta, double tol) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "bounds beta";
    doc["delta"] = delta;
    doc["beta"] = beta_threshold(delta, tol);
    emit_json(opts, doc);
    return 0;
}

int cmd_bounds_delta_t(const GlobalOptions& opts, int t, long long n, double c) {
    const DeltaTBounds b = delta_t_bounds(t, n, c);
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "bounds delta-t";
    doc["t"] = b.t;
    doc["n"] = b.n;
    doc["c"] = b.c_const;
    doc["lower"] = b.lower;
    doc["upper"] = b.upper;
    if (b.sharp) doc["sharp_main_term"] = *b.sharp;
    doc["kst_bound"] = kst_bound(n, t, c);
    emit_json(opts, doc);
    return 0;
}

int cmd_table(const GlobalOptions& opts) {
    const auto rows = bounds_table(3, 10);
    const auto& published = published_small_delta_table();
    bool all_match = true;
    json jrows = json::array();
    std::ostringstream csv;
    csv << "delta,lower,upper,published_lower,published_upper,match\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool match = std::abs(rows[i].lower - published[i].lower) <= 1.0000001e-5 &&
                           std::abs(rows[i].upper - published[i].upper) <= 5.0000001e-4;
        all_match = all_match && match;
        jrows.push_back({{"delta", rows[i].delta},
                         {"lower", rows[i].lower},
                         {"upper", rows[i].upper},
                         {"published_lower", published[i].lower},
                         {"published_upper", published[i].upper},
                         {"match", match}});
        csv << rows[i].delta << ',' << format_double(rows[i].lower, 5) << ','
            << format_double(rows[i].upper, 4) << ',' << format_double(published[i].lower, 5)
            << ',' << format_double(published[i].upper, 4) << ',' << (match ? "true" : "false")
            << '\n';
    }
    if (opts.format == "csv") {
        emit_text(opts, csv.str());
    } else {
        json doc;
        doc["schema"] = kSchemaVersion;
        doc["command"] = "table";
        doc["rows"] = jrows;
        doc["all_match"] = all_match;
        emit_json(opts, doc);
    }
    return all_match ? 0 : 1;
}

int cmd_verify_f2(const GlobalOptions& opts, int n_max, int trials_per_n) {
    if (n_max > 12) throw CLI::ValidationError("verify-f2", "--n-max is capped at 12");
    bool all_ok = true;
    json per_n = json::array();
    for (int n = 2; n <= n_max; ++n) {
        const int expected = (n + 1) / 2 - 1;
        const BipartiteGraph cycle = even_cycle(n);
        const SolveResult cycle_result = max_bihole(cycle);
        bool n_ok = cycle_result.k == expected;
        json entry;
        entry["n"] = n;
        entry["expected"] = expected;
        entry["cycle_k"] = cycle_result.k;

        json failures = json::array();
        for (int trial = 0; trial < trials_per_n; ++trial) {
            RandomEngine rng(RandomEngine::derive_seed(
                opts.seed, static_cast<std::uint64_t>(n) * 1000003ULL + trial));
            const BipartiteGraph g = random_maxdeg2_graph(n, rng);
            const BiHoleCertificate cert = bihole_maxdeg2(g);
            const int exact_k = max_bihole(g).k;
            const bool ok =
                verify_bihole(g, cert) && cert.size() >= expected && cert.size() <= exact_k;
            if (!ok) {
                failures.push_back({{"trial", trial},
                                    {"constructive", cert.size()},
                                    {"exact", exact_k},
                                    {"graph", write_graph_text(g)}});
                n_ok = false;
            }
        }
        entry["trials"] = trials_per_n;
        entry["failures"] = failures;
        entry["ok"] = n_ok;
        per_n.push_back(entry);
        all_ok = all_ok && n_ok;
    }
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "verify-f2";
    doc["seed"] = std::to_string(opts.seed);
    doc["results"] = per_n;
    doc["all_ok"] = all_ok;
    emit_json(opts, doc);
    return all_ok ? 0 : 1;
}

int cmd_montecarlo(const GlobalOptions& opts, const std::string& kind, int n, int delta,
                   int trials, std::string measure, int max_rejects) {
    if (measure == "auto") measure = n <= 14 ? "exact" : "general-delta";
    if (measure == "exact" && n > 14)
        throw CLI::ValidationError("montecarlo", "exact measurement needs n <= 14");
    if (measure == "xi-chain" && delta < 3)
        throw CLI::ValidationError("montecarlo", "xi-chain needs delta >= 3");

    struct Record {
        bool generated = false;
        bool measured = false;
        std::uint64_t seed = 0;
        int rejections = 0;
        int realized_delta = 0;
        int achieved = -1;
        long long guarantee = 0;
        bool pass = false;
    };
    std::vector<Record> records(static_cast<std::size_t>(trials));

    parallel_trials(trials, opts.threads, [&](int trial) {
        Record& rec = records[static_cast<std::size_t>(trial)];
        rec.seed = RandomEngine::derive_seed(opts.seed, static_cast<std::uint64_t>(trial));
        RandomEngine rng(rec.seed);

        std::optional<BipartiteGraph> graph;
        if (kind == "pairing") {
            PairingResult pr = pairing_model(n, delta, rng, max_rejects);
            rec.rejections = pr.rejections;
            graph = std::move(pr.graph);
            rec.realized_delta = delta;
        } else {
            graph = random_binomial_bipartite(n, n, static_cast<double>(delta) / n, rng);
            rec.realized_delta = graph->max_degree_a();
        }
        if (!graph) return;
        rec.generated = true;
        rec.guarantee = degree_guarantee(n, rec.realized_delta);

        if (measure == "exact") {
            rec.achieved = max_bihole(*graph).k;
            rec.measured = true;
        } else if (measure == "general-delta") {
            const BiHoleCertificate cert =
                bihole_general_delta(*graph, std::max(2, rec.realized_delta));
            rec.measured = verify_bihole(*graph, cert);
            rec.achieved = cert.size();
        } else if (measure == "xi-chain") {
            XiChainResult r = bihole_xi_chain(*graph, std::max(3, rec.realized_delta), rng);
            if (r.certificate) {
                rec.measured = verify_bihole(*graph, *r.certificate);
                rec.achieved = r.certificate->size();
            }
        } else if (measure == "maxdeg2") {
            const BiHoleCertificate cert = bihole_maxdeg2(*graph);
            rec.measured = verify_bihole(*graph, cert);
            rec.achieved = cert.size();
        }
        rec.pass = rec.measured && rec.achieved >= rec.guarantee;
    });

    int generation_failures = 0, measured = 0, passes = 0;
    long long min_k = -1, max_k = -1, sum_k = 0;
    json jrecords = json::array();
    std::ostringstream csv;
    csv << "trial,seed,generated,rejections,realized_delta,achieved,guarantee,pass\n";
    for (int trial = 0; trial < trials; ++trial) {
        const Record& rec = records[static_cast<std::size_t>(trial)];
        if (!rec.generated) ++generation_failures;
        if (rec.measured) {
            ++measured;
            if (min_k < 0 || rec.achieved < min_k) min_k = rec.achieved;
            if (rec.achieved > max_k) max_k = rec.achieved;
            sum_k += rec.achieved;
        }
        if (rec.pass) ++passes;
        jrecords.push_back({{"trial", trial},
                            {"seed", std::to_string(rec.seed)},
                            {"generated", rec.generated},
                            {"rejections", rec.rejections},
                            {"realized_delta", rec.realized_delta},
                            {"achieved", rec.achieved},
                            {"guarantee", rec.guarantee},
                            {"pass", rec.pass}});
        csv << trial << ',' << rec.seed << ',' << rec.generated << ',' << rec.rejections << ','
            << rec.realized_delta << ',' << rec.achieved << ',' << rec.guarantee << ','
            << (rec.pass ? "true" : "false") << '\n';
    }

    json summary;
    summary["trials"] = trials;
    summary["generation_failures"] = generation_failures;
    summary["measured"] = measured;
    summary["passes"] = passes;
    summary["min"] = min_k;
    summary["mean"] = measured > 0 ? static_cast<double>(sum_k) / measured : 0.0;
    summary["max"] = max_k;
    if (delta >= 3) {
        summary["lower_reference"] = lower_constant(delta) * n;
        summary["beta_reference"] = beta_threshold(delta) * n;
    }

    const bool all_pass = passes == trials - generation_failures && measured == trials - generation_failures;
    if (opts.format == "csv") {
        emit_text(opts, csv.str());
    } else {
        json doc;
        doc["schema"] = kSchemaVersion;
        doc["command"] = "montecarlo";
        doc["config"] = {{"kind", kind},       {"n", n},
                         {"delta", delta},     {"trials", trials},
                         {"measure", measure}, {"seed", std::to_string(opts.seed)}};
        doc["records"] = jrecords;
        doc["summary"] = summary;
        emit_json(opts, doc);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-hole toolkit: exact solving, constructive algorithms, random "
                 "constructions, and numeric bound certification for degree-bounded "
                 "bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--seed", opts.seed, "master seed; all randomness derives from it");
    app.add_option("--format", opts.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", opts.out, "output path (default stdout)");
    app.add_option("--threads", opts.threads, "worker threads for trial sweeps")
        ->check(CLI::PositiveNumber);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph in edge-list format");
    std::string gen_kind;
    int gen_n = 0, gen_delta = 0, gen_t = 0, gen_rejects = 10000;
    double gen_c = 0.5;
    gen->add_option("--kind", gen_kind, "cycle|binomial|pairing|kttfree")->required();
    gen->add_option("--n", gen_n, "part size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--delta", gen_delta, "degree parameter");
    gen->add_option("--t", gen_t, "forbidden K_{t,t} size (kttfree)");
    gen->add_option("--c", gen_c, "density constant (kttfree)");
    gen->add_option("--max-rejects", gen_rejects, "pairing rejection budget");

    // solve
    auto* solve = app.add_subcommand("solve", "exact maximum bi-hole of a graph file");
    std::string solve_path;
    std::uint64_t solve_budget = 0;
    solve->add_option("graph", solve_path, "edge-list file, or - for stdin")->required();
    solve->add_option("--budget", solve_budget, "node budget (0 = unlimited)");

    // construct
    auto* construct = app.add_subcommand("construct", "run a proof-derived constructive algorithm");
    std::string cons_path, cons_algorithm;
    int cons_delta = 0, cons_retries = 200;
    double cons_eps = 0.5;
    int cons_t_flag = 0;
    construct->add_option("graph", cons_path, "edge-list file, or - for stdin")->required();
    construct
        ->add_option("--algorithm", cons_algorithm,
                     "maxdeg2|general-delta|xi-chain|random-subset|dense-regime")
        ->required();
    construct->add_option("--delta", cons_delta, "degree bound (default: realized max degree)");
    construct->add_option("--eps", cons_eps, "dense-regime eps");
    construct->add_option("--t", cons_t_flag, "dense-regime target t (default from eps)");
    construct->add_option("--retries", cons_retries, "per-level retry budget");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "numeric bound calculators");
    bounds->require_subcommand(1);
    auto* btable = bounds->add_subcommand("table", "lower/upper constant table");
    int bt_min = 3, bt_max = 10;
    btable->add_option("--delta-min", bt_min);
    btable->add_option("--delta-max", bt_max);
    auto* bh = bounds->add_subcommand("h", "exact h(x,n,delta) inequality check");
    long long bh_n = 0;
    int bh_delta = 0;
    bh->add_option("--n", bh_n)->required();
    bh->add_option("--delta", bh_delta)->required();
    auto* bbeta = bounds->add_subcommand("beta", "pairing-model upper threshold");
    int bb_delta = 0;
    double bb_tol = 1e-9;
    bbeta->add_option("--delta", bb_delta)->required();
    bbeta->add_option("--tol", bb_tol);
    auto* bdt = bounds->add_subcommand("delta-t", "degree threshold envelopes for size-t bi-holes");
    int dt_t = 0;
    long long dt_n = 0;
    double dt_c = 1.0;
    bdt->add_option("--t", dt_t)->required();
    bdt->add_option("--n", dt_n)->required();
    bdt->add_option("--c", dt_c);

    // verify-f2
    auto* vf2 = app.add_subcommand("verify-f2", "f(n,2) law verification suite");
    int vf2_nmax = 12, vf2_trials = 50;
    vf2->add_option("--n-max", vf2_nmax);
    vf2->add_option("--trials", vf2_trials, "random instances per n");

    // montecarlo
    auto* mc = app.add_subcommand("montecarlo", "seeded random-instance sweep");
    std::string mc_kind = "pairing", mc_measure = "auto";
    int mc_n = 0, mc_delta = 0, mc_trials = 100, mc_rejects = 10000;
    mc->add_option("--kind", mc_kind, "pairing|binomial")
        ->check(CLI::IsMember({"pairing", "binomial"}));
    mc->add_option("--n", mc_n)->required();
    mc->add_option("--delta", mc_delta)->required();
    mc->add_option("--trials", mc_trials);
    mc->add_option("--measure", mc_measure, "auto|exact|maxdeg2|general-delta|xi-chain");
    mc->add_option("--max-rejects", mc_rejects);

    // table
    auto* table = app.add_subcommand("table", "reproduce the small-delta bound table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(opts, gen_kind, gen_n, gen_delta, gen_t, gen_c, gen_rejects);
        if (solve->parsed())
            return cmd_solve(opts, solve_path,
                             solve_budget ? std::optional<std::uint64_t>(solve_budget)
                                          : std::nullopt);
        if (construct->parsed())
            return cmd_construct(opts, cons_path, cons_algorithm, cons_delta, cons_eps,
                                 cons_t_flag > 0 ? std::optional<int>(cons_t_flag) : std::nullopt,
                                 cons_retries);
        if (bounds->parsed()) {
            if (btable->parsed()) return cmd_bounds_table(opts, bt_min, bt_max);
            if (bh->parsed()) return cmd_bounds_h(opts, bh_n, bh_delta);
            if (bbeta->parsed()) return cmd_bounds_beta(opts, bb_delta, bb_tol);
            if (bdt->parsed()) return cmd_bounds_delta_t(opts, dt_t, dt_n, dt_c);
        }
        if (vf2->parsed()) return cmd_verify_f2(opts, vf2_nmax, vf2_trials);
        if (mc->parsed())
            return cmd_montecarlo(opts, mc_kind, mc_n, mc_delta, mc_trials, mc_measure, mc_rejects);
        if (table->parsed()) return cmd_table(opts);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
