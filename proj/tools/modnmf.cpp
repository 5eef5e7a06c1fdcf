// command line front end: generate / detect / eval / equivalence / benchmark

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modnmf/experiments.hpp"
#include "modnmf/fast_greedy.hpp"
#include "modnmf/generators.hpp"
#include "modnmf/io.hpp"
#include "modnmf/metrics.hpp"
#include "modnmf/objectives.hpp"
#include "modnmf/solver.hpp"

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw modnmf::Error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw modnmf::Error("write to " + path + " failed");
}

struct GenerateOptions {
    std::string family = "gn";
    std::string prefix;
    std::uint64_t seed = 0;
    std::vector<int> sizes;
    double theta_in = 0.0;
    double theta_out = 0.0;
    double z_out = 2.0;
    modnmf::LfrParams lfr{1000, 0.1, 20.0, 50, 20, 100};
};

int cmd_generate(const GenerateOptions& opt) {
    using namespace modnmf;
    Graph g;
    Partition planted;
    if (opt.family == "sbm") {
        if (opt.sizes.empty()) throw ParamError("sbm generation needs --sizes");
        SbmParams params;
        params.sizes = opt.sizes;
        const std::size_t c = opt.sizes.size();
        params.theta = Matrix(c, c, opt.theta_out);
        for (std::size_t r = 0; r < c; ++r) params.theta(r, r) = opt.theta_in;
        std::tie(g, planted) = sample_sbm(params, opt.seed);
    } else if (opt.family == "gn") {
        std::tie(g, planted) = sample_gn(opt.z_out, opt.seed);
    } else {
        std::tie(g, planted) = sample_lfr(opt.lfr, opt.seed);
    }
    const std::string edges = opt.prefix + ".edges";
    const std::string part = opt.prefix + ".part";
    save_edge_list_file(g, edges);
    save_partition_file(planted, part);
    std::cout << "wrote " << edges << " (" << g.node_count() << " nodes, " << g.edge_count()
              << " edges) and " << part << " (" << planted.community_count() << " communities)\n";
    return 0;
}

struct DetectOptions {
    std::string algo;
    std::string input;
    std::string output;
    int communities = 2;
    int iters = 500;
    int runs = 10;
    std::uint64_t seed = 0;
    std::optional<double> sigma;
};

int cmd_detect(const DetectOptions& opt) {
    using namespace modnmf;
    const Graph g = load_edge_list_file(opt.input);
    Partition result;
    if (opt.algo == "fast-greedy") {
        result = fast_greedy(g);
    } else {
        SolverConfig cfg;
        cfg.c = opt.communities;
        cfg.iters = opt.iters;
        cfg.runs = opt.runs;
        cfg.seed = opt.seed;
        cfg.record_objective = false;
        if (opt.algo == "q-nmf") {
            result = detect_q_nmf(g, cfg).first;
        } else {
            result = detect_d_nmf(g, cfg, opt.sigma).first;
        }
    }
    save_partition_file(result, opt.output);
    std::cout << "wrote " << opt.output << " (" << result.community_count()
              << " communities, q " << format_real(modularity_q(g, result)) << ")\n";
    return 0;
}

int cmd_eval(const std::string& truth_path, const std::string& inferred_path) {
    using namespace modnmf;
    const Partition truth = load_partition_file(truth_path);
    const Partition inferred = load_partition_file(inferred_path);
    std::cout << format_real(nmi(truth, inferred)) << "\n";
    return 0;
}

struct RunOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string output;
    std::string gnuplot;
    bool audit = false;
};

int cmd_run(const RunOptions& opt, bool benchmark_subcommand) {
    using namespace modnmf;
    ExperimentConfig cfg = ExperimentConfig::from_file(opt.config_path);
    const bool is_benchmark = cfg.family == ExperimentFamily::benchmark;
    if (is_benchmark != benchmark_subcommand)
        throw ParamError(opt.config_path + ": config family belongs to the " +
                         std::string(is_benchmark ? "benchmark" : "equivalence") + " subcommand");
    if (opt.seed) cfg.seed = *opt.seed;
    if (!opt.output.empty()) cfg.output = opt.output;
    if (opt.audit) cfg.audit = true;
    if (cfg.output.empty())
        throw ParamError(opt.config_path + ": no output path (set output= or pass --output)");

    const ExperimentResult res = run_experiment(cfg);
    write_text_file(cfg.output, res.csv);
    std::cout << "wrote " << cfg.output << "\n";
    if (!opt.gnuplot.empty()) {
        write_text_file(opt.gnuplot, res.gnuplot);
        std::cout << "wrote " << opt.gnuplot << "\n";
    }
    for (const auto& line : res.summary) std::cout << line << "\n";
    for (const auto& line : res.failures) std::cerr << "failure: " << line << "\n";
    return res.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"community structure experiments: synthetic networks, NMF-based detection, "
                 "objective-equivalence sweeps"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "sample a synthetic network");
    generate->add_option("--family", gen.family, "network family")
        ->check(CLI::IsMember({"sbm", "gn", "lfr"}));
    generate->add_option("--output", gen.prefix, "output prefix (<prefix>.edges, <prefix>.part)")
        ->required();
    generate->add_option("--seed", gen.seed, "rng seed");
    generate->add_option("--sizes", gen.sizes, "sbm community sizes")->delimiter(',');
    generate->add_option("--theta-in", gen.theta_in, "sbm within-community edge probability");
    generate->add_option("--theta-out", gen.theta_out, "sbm cross-community edge probability");
    generate->add_option("--z-out", gen.z_out, "gn expected cross-community degree (default 2)");
    generate->add_option("--n", gen.lfr.n, "lfr node count");
    generate->add_option("--mu", gen.lfr.mu, "lfr mixing parameter");
    generate->add_option("--k", gen.lfr.k, "lfr mean degree");
    generate->add_option("--maxk", gen.lfr.maxk, "lfr max degree");
    generate->add_option("--minc", gen.lfr.minc, "lfr min community size");
    generate->add_option("--maxc", gen.lfr.maxc, "lfr max community size");

    DetectOptions det;
    auto* detect = app.add_subcommand("detect", "run community detection on an edge-list file");
    detect->add_option("--algo", det.algo, "detection algorithm")
        ->required()
        ->check(CLI::IsMember({"q-nmf", "d-nmf", "fast-greedy"}));
    detect->add_option("--communities", det.communities, "community count for the nmf methods");
    detect->add_option("--iters", det.iters, "multiplicative updates per run");
    detect->add_option("--runs", det.runs, "random restarts");
    detect->add_option("--seed", det.seed, "rng seed");
    double sigma_value = 0.0;
    auto* sigma_opt = detect->add_option("--sigma", sigma_value, "d-nmf shift (default: max degree)");
    detect->add_option("input", det.input, "edge-list file")->required();
    detect->add_option("output", det.output, "partition file to write")->required();

    std::string truth_path, inferred_path;
    auto* eval = app.add_subcommand("eval", "compare two partition files");
    eval->add_option("truth", truth_path, "reference partition file")->required();
    eval->add_option("inferred", inferred_path, "partition file to score")->required();

    RunOptions run_opts[2];
    CLI::App* runners[2];
    runners[0] = app.add_subcommand("equivalence", "objective-equivalence sweep from a config file");
    runners[1] = app.add_subcommand("benchmark", "detection benchmark sweep from a config file");
    for (int i = 0; i < 2; ++i) {
        auto& o = run_opts[i];
        runners[i]->add_option("--config", o.config_path, "key=value experiment config")->required();
        runners[i]
            ->add_option_function<std::uint64_t>(
                "--seed", [&o](std::uint64_t v) { o.seed = v; }, "override the config seed")
            ->expected(1);
        runners[i]->add_option("--output", o.output, "override the config output path");
        runners[i]->add_option("--gnuplot", o.gnuplot, "also write a plot-ready two-column file");
        runners[i]->add_flag("--audit", o.audit, "re-check emitted q values against fresh evaluation");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (detect->parsed()) {
            if (*sigma_opt) det.sigma = sigma_value;
            return cmd_detect(det);
        }
        if (eval->parsed()) return cmd_eval(truth_path, inferred_path);
        if (runners[0]->parsed()) return cmd_run(run_opts[0], false);
        if (runners[1]->parsed()) return cmd_run(run_opts[1], true);
    } catch (const modnmf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
