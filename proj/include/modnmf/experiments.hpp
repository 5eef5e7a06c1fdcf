#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modnmf/generators.hpp"

namespace modnmf {

enum class ExperimentFamily { q_frobenius, d_frobenius, q_kl, q_rb_kl, q_afg_kl, benchmark };
enum class NetworkKind { sbm, gn, lfr, files };

// Flat key=value config file: one `key = value` per line, '#' starts a
// comment, lists are comma-separated. One experiment per file.
class KeyValues {
  public:
    static KeyValues from_file(const std::filesystem::path& path);
    static KeyValues from_string(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_real(const std::string& key) const;
    double get_real(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_real_list(const std::string& key) const;
    std::vector<int> get_int_list(const std::string& key) const;
    std::vector<std::string> get_string_list(const std::string& key) const;

    // keys never asked for — catches config typos
    std::vector<std::string> unused_keys() const;
    const std::string& origin() const { return origin_; }

  private:
    std::string origin_;
    std::map<std::string, std::string> values_;
    mutable std::map<std::string, bool> used_;
};

struct ExperimentConfig {
    ExperimentFamily family = ExperimentFamily::q_frobenius;
    NetworkKind network = NetworkKind::sbm;
    std::uint64_t seed = 0;
    std::string output;  // CSV path; CLI --output overrides
    bool audit = false;
    int repeats = 1;  // networks per sweep value

    // sbm sweeps over theta_in
    std::vector<int> sizes;
    double theta_out = 0.0;
    std::vector<double> theta_in;
    // gn sweeps over z_out
    std::vector<double> z_out;
    // lfr sweeps over mu
    LfrParams lfr;  // mu field unused (comes from the sweep)
    std::vector<double> mu;
    // externally generated networks: (network file, community file) pairs
    std::vector<std::pair<std::string, std::string>> files;

    std::vector<double> sigma_offsets;  // d-frobenius: sigma = max degree + offset
    std::vector<double> gamma;          // q-rb-kl sweep of resolution parameters
    std::vector<double> selfloop;       // q-afg-kl sweep of self-loop weights

    std::vector<std::string> algorithms;  // benchmark: subset of q-nmf, d-nmf, fast-greedy
    int runs = 10;
    int iters = 500;

    static ExperimentConfig from_file(const std::filesystem::path& path);
    static ExperimentConfig from_key_values(const KeyValues& kv);
};

struct BenchmarkCell {
    double sweep_value = 0.0;
    std::string algorithm;
    double mean_nmi = 0.0;
    int runs = 0;      // evaluations averaged per network (1 for fast-greedy)
    int networks = 0;  // networks that contributed
};

struct ExperimentResult {
    std::string csv;      // header + rows, '\n' line ends, 17 significant digits
    std::string gnuplot;  // two-column companion for quick plotting
    std::vector<std::string> summary;   // human-readable result lines
    std::vector<std::string> failures;  // per-item errors (partial output is kept)
    std::map<std::string, double> stats;
    std::vector<BenchmarkCell> benchmark_cells;
    bool ok() const { return failures.empty(); }
};

ExperimentResult run_equivalence_q_frobenius(const ExperimentConfig& cfg);
ExperimentResult run_equivalence_d_frobenius(const ExperimentConfig& cfg);
// covers the q-kl, q-rb-kl and q-afg-kl families (they differ in the null)
ExperimentResult run_equivalence_q_kl(const ExperimentConfig& cfg);
ExperimentResult run_benchmark(const ExperimentConfig& cfg);

// family dispatch
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// %.17g — round-trips doubles exactly
std::string format_real(double v);

}  // namespace modnmf
