#include "modnmf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "modnmf/fast_greedy.hpp"
#include "modnmf/io.hpp"
#include "modnmf/metrics.hpp"
#include "modnmf/objectives.hpp"
#include "modnmf/rng.hpp"
#include "modnmf/solver.hpp"

namespace modnmf {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// key=value config files
// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

KeyValues KeyValues::from_string(const std::string& text, const std::string& origin) {
    KeyValues kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ParseError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (kv.values_.count(key))
            throw ParseError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv.values_[key] = value;
    }
    return kv;
}

KeyValues KeyValues::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str(), path.string());
}

bool KeyValues::has(const std::string& key) const {
    used_[key] = true;
    return values_.count(key) != 0;
}

std::string KeyValues::get_string(const std::string& key) const {
    used_[key] = true;
    const auto it = values_.find(key);
    if (it == values_.end()) throw ParseError(origin_ + ": missing required key '" + key + "'");
    return it->second;
}

std::string KeyValues::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

namespace {

double parse_real(const std::string& raw, const std::string& origin, const std::string& key) {
    const std::string s = trim(raw);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError(origin + ": key '" + key + "': cannot parse real from '" + raw + "'");
    return v;
}

long long parse_int(const std::string& raw, const std::string& origin, const std::string& key) {
    const std::string s = trim(raw);
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError(origin + ": key '" + key + "': cannot parse integer from '" + raw + "'");
    return v;
}

}  // namespace

double KeyValues::get_real(const std::string& key) const {
    return parse_real(get_string(key), origin_, key);
}
double KeyValues::get_real(const std::string& key, double fallback) const {
    return has(key) ? get_real(key) : fallback;
}
long long KeyValues::get_int(const std::string& key) const {
    return parse_int(get_string(key), origin_, key);
}
long long KeyValues::get_int(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t KeyValues::get_u64(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const std::string s = trim(get_string(key));
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError(origin_ + ": key '" + key + "': cannot parse seed from '" + s + "'");
    return v;
}

bool KeyValues::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string s = trim(get_string(key));
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw ParseError(origin_ + ": key '" + key + "': expected a boolean, got '" + s + "'");
}

std::vector<double> KeyValues::get_real_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split(get_string(key), ','))
        out.push_back(parse_real(item, origin_, key));
    return out;
}

std::vector<int> KeyValues::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (const auto& item : split(get_string(key), ','))
        out.push_back(static_cast<int>(parse_int(item, origin_, key)));
    return out;
}

std::vector<std::string> KeyValues::get_string_list(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& item : split(get_string(key), ',')) {
        const std::string t = trim(item);
        if (t.empty()) throw ParseError(origin_ + ": key '" + key + "': empty list item");
        out.push_back(t);
    }
    return out;
}

std::vector<std::string> KeyValues::unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [key, value] : values_)
        if (!used_.count(key)) out.push_back(key);
    return out;
}

// ---------------------------------------------------------------------------
// experiment configuration
// ---------------------------------------------------------------------------

namespace {

ExperimentFamily parse_family(const std::string& s, const std::string& origin) {
    if (s == "q-frobenius") return ExperimentFamily::q_frobenius;
    if (s == "d-frobenius") return ExperimentFamily::d_frobenius;
    if (s == "q-kl") return ExperimentFamily::q_kl;
    if (s == "q-rb-kl") return ExperimentFamily::q_rb_kl;
    if (s == "q-afg-kl") return ExperimentFamily::q_afg_kl;
    if (s == "benchmark") return ExperimentFamily::benchmark;
    throw ParseError(origin + ": unknown family '" + s + "'");
}

NetworkKind parse_network(const std::string& s, const std::string& origin) {
    if (s == "sbm") return NetworkKind::sbm;
    if (s == "gn") return NetworkKind::gn;
    if (s == "lfr") return NetworkKind::lfr;
    if (s == "files") return NetworkKind::files;
    throw ParseError(origin + ": unknown network kind '" + s + "'");
}

bool is_kl_family(ExperimentFamily f) {
    return f == ExperimentFamily::q_kl || f == ExperimentFamily::q_rb_kl ||
           f == ExperimentFamily::q_afg_kl;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_key_values(const KeyValues& kv) {
    ExperimentConfig cfg;
    const std::string& origin = kv.origin();
    cfg.family = parse_family(kv.get_string("family"), origin);

    const std::string default_network = is_kl_family(cfg.family) ? "gn" : "sbm";
    cfg.network = parse_network(kv.get_string("network", default_network), origin);
    if (is_kl_family(cfg.family) && cfg.network != NetworkKind::gn)
        throw ParseError(origin + ": divergence families sweep z_out and need network = gn");

    cfg.seed = kv.get_u64("seed", 0);
    cfg.output = kv.get_string("output", "");
    cfg.audit = kv.get_bool("audit", false);
    cfg.repeats = static_cast<int>(kv.get_int("repeats", 1));
    if (cfg.repeats < 1) throw ParseError(origin + ": repeats must be >= 1");

    switch (cfg.network) {
        case NetworkKind::sbm:
            cfg.sizes = kv.get_int_list("sizes");
            cfg.theta_out = kv.get_real("theta_out");
            cfg.theta_in = kv.get_real_list("theta_in");
            break;
        case NetworkKind::gn:
            cfg.z_out = kv.get_real_list("z_out");
            break;
        case NetworkKind::lfr:
            cfg.lfr.n = static_cast<int>(kv.get_int("n"));
            cfg.lfr.k = kv.get_real("k");
            cfg.lfr.maxk = static_cast<int>(kv.get_int("maxk"));
            cfg.lfr.minc = static_cast<int>(kv.get_int("minc"));
            cfg.lfr.maxc = static_cast<int>(kv.get_int("maxc"));
            cfg.mu = kv.get_real_list("mu");
            break;
        case NetworkKind::files: {
            for (const auto& item : kv.get_string_list("files")) {
                const auto colon = item.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
                    throw ParseError(origin + ": files items must look like network.dat:community.dat");
                cfg.files.emplace_back(item.substr(0, colon), item.substr(colon + 1));
            }
            cfg.repeats = 1;  // each file pair is one network
            break;
        }
    }

    if (cfg.family == ExperimentFamily::d_frobenius)
        cfg.sigma_offsets = kv.has("sigma_offsets") ? kv.get_real_list("sigma_offsets")
                                                    : std::vector<double>{0.0, 10.0};
    if (cfg.family == ExperimentFamily::q_rb_kl)
        cfg.gamma = kv.has("gamma") ? kv.get_real_list("gamma") : std::vector<double>{0.5, 2.0};
    if (cfg.family == ExperimentFamily::q_afg_kl)
        cfg.selfloop = kv.has("selfloop") ? kv.get_real_list("selfloop") : std::vector<double>{1.0, 2.0};
    if (cfg.family == ExperimentFamily::benchmark) {
        cfg.algorithms = kv.has("algorithms")
                             ? kv.get_string_list("algorithms")
                             : std::vector<std::string>{"q-nmf", "d-nmf", "fast-greedy"};
        for (const auto& a : cfg.algorithms)
            if (a != "q-nmf" && a != "d-nmf" && a != "fast-greedy")
                throw ParseError(origin + ": unknown algorithm '" + a + "'");
        cfg.runs = static_cast<int>(kv.get_int("runs", 10));
        cfg.iters = static_cast<int>(kv.get_int("iters", 500));
        if (cfg.runs < 1 || cfg.iters < 1)
            throw ParseError(origin + ": runs and iters must be >= 1");
    }

    if (const auto unused = kv.unused_keys(); !unused.empty()) {
        std::string msg = origin + ": unrecognized keys:";
        for (const auto& k : unused) msg += " " + k;
        throw ParseError(msg);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
    return from_key_values(KeyValues::from_file(path));
}

// ---------------------------------------------------------------------------
// sweep plumbing shared by the runners
// ---------------------------------------------------------------------------

namespace {

std::vector<double> sweep_values(const ExperimentConfig& cfg) {
    switch (cfg.network) {
        case NetworkKind::sbm:
            return cfg.theta_in;
        case NetworkKind::gn:
            return cfg.z_out;
        case NetworkKind::lfr:
            return cfg.mu;
        case NetworkKind::files: {
            std::vector<double> idx(cfg.files.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
            return idx;
        }
    }
    return {};
}

std::pair<Graph, Partition> make_network(const ExperimentConfig& cfg, std::size_t sweep_idx,
                                         double sweep_value, std::uint64_t net_seed) {
    switch (cfg.network) {
        case NetworkKind::sbm: {
            SbmParams params;
            params.sizes = cfg.sizes;
            const std::size_t c = cfg.sizes.size();
            params.theta = Matrix(c, c, cfg.theta_out);
            for (std::size_t r = 0; r < c; ++r) params.theta(r, r) = sweep_value;
            return sample_sbm(params, net_seed);
        }
        case NetworkKind::gn:
            return sample_gn(sweep_value, net_seed);
        case NetworkKind::lfr: {
            LfrParams params = cfg.lfr;
            params.mu = sweep_value;
            return sample_lfr(params, net_seed);
        }
        case NetworkKind::files:
            return load_lfr_pair(cfg.files[sweep_idx].first, cfg.files[sweep_idx].second);
    }
    throw ParamError("unreachable network kind");
}

void append_row(std::string& csv, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) csv += ',';
        csv += cells[i];
    }
    csv += '\n';
}

// formatted CSV value vs. a from-scratch recomputation (catches formatter bugs)
void audit_q_value(const Graph& g, const Partition& p, const std::string& formatted,
                   const std::string& context, std::vector<std::string>& failures) {
    const double parsed = std::strtod(formatted.c_str(), nullptr);
    const double fresh = modularity_q(g, p);
    if (std::fabs(parsed - fresh) > 1e-12)
        failures.push_back(context + ": audit mismatch: csv " + formatted + " vs recomputed " +
                           format_real(fresh));
}

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// equivalence: standard score vs Frobenius objective at the walk matrix
// ---------------------------------------------------------------------------

ExperimentResult run_equivalence_q_frobenius(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.csv = "network_index,sweep_value,n,m,q_value,frobenius_value,seed\n";
    res.gnuplot = "# q_value frobenius_value\n";
    const auto values = sweep_values(cfg);
    if (values.empty()) throw ParamError("empty sweep");

    std::vector<double> xs, ys;
    for (std::size_t sweep_idx = 0; sweep_idx < values.size(); ++sweep_idx) {
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            const std::size_t index = sweep_idx * static_cast<std::size_t>(cfg.repeats) +
                                      static_cast<std::size_t>(rep);
            const std::uint64_t net_seed = substream_seed(cfg.seed, index);
            try {
                const auto [g, planted] = make_network(cfg, sweep_idx, values[sweep_idx], net_seed);
                const double q = modularity_q(g, planted);
                const TargetMatrix w = build_w_star(g);
                const MembershipMatrix s = partition_to_membership(planted);
                const double fro = frobenius_objective(w, s);
                const std::string q_str = format_real(q);
                append_row(res.csv, {std::to_string(index), format_real(values[sweep_idx]),
                                     std::to_string(g.node_count()), std::to_string(g.edge_count()),
                                     q_str, format_real(fro), u64_str(net_seed)});
                res.gnuplot += q_str + " " + format_real(fro) + "\n";
                xs.push_back(q);
                ys.push_back(fro);
                if (cfg.audit)
                    audit_q_value(g, planted, q_str, "network " + std::to_string(index),
                                  res.failures);
            } catch (const Error& e) {
                res.failures.push_back("network " + std::to_string(index) + " (sweep_value " +
                                       format_real(values[sweep_idx]) + "): " + e.what());
            }
        }
    }
    try {
        const double r = pearson(xs, ys);
        res.stats["pearson_r"] = r;
        res.summary.push_back("pearson r(q_value, frobenius_value) = " + format_real(r) + " over " +
                              std::to_string(xs.size()) + " networks");
    } catch (const Error& e) {
        res.failures.push_back(std::string("correlation unavailable: ") + e.what());
    }
    return res;
}

// ---------------------------------------------------------------------------
// equivalence: density score vs Frobenius objective at the shifted matrix
// ---------------------------------------------------------------------------

ExperimentResult run_equivalence_d_frobenius(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.csv = "network_index,sweep_value,sigma,n,m,density_value,frobenius_value,identity_residual,seed\n";
    res.gnuplot = "# density_value frobenius_value (one block per sigma offset)\n";
    const auto values = sweep_values(cfg);
    if (values.empty()) throw ParamError("empty sweep");
    if (cfg.sigma_offsets.empty()) throw ParamError("d-frobenius needs at least one sigma offset");

    std::map<std::size_t, double> max_residual;       // by offset position
    std::map<std::size_t, std::string> gnuplot_block;
    for (std::size_t sweep_idx = 0; sweep_idx < values.size(); ++sweep_idx) {
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            const std::size_t index = sweep_idx * static_cast<std::size_t>(cfg.repeats) +
                                      static_cast<std::size_t>(rep);
            const std::uint64_t net_seed = substream_seed(cfg.seed, index);
            Graph g;
            Partition planted;
            try {
                std::tie(g, planted) = make_network(cfg, sweep_idx, values[sweep_idx], net_seed);
            } catch (const Error& e) {
                res.failures.push_back("network " + std::to_string(index) + " (sweep_value " +
                                       format_real(values[sweep_idx]) + "): " + e.what());
                continue;
            }
            for (std::size_t oi = 0; oi < cfg.sigma_offsets.size(); ++oi) {
                try {
                    const double sigma = static_cast<double>(g.max_degree()) + cfg.sigma_offsets[oi];
                    const TargetMatrix w1 = build_w1(g, sigma);
                    const MembershipMatrix h = scale_membership(partition_to_membership(planted));
                    const double fro = frobenius_objective(w1, h);
                    const double d = modularity_density(g, planted);
                    const double c = static_cast<double>(planted.community_count());
                    const double expansion =
                        frobenius_norm_sq(w1.entries) - 2.0 * (d + sigma * c) + c;
                    const double residual = fro - expansion;
                    append_row(res.csv,
                               {std::to_string(index), format_real(values[sweep_idx]),
                                format_real(sigma), std::to_string(g.node_count()),
                                std::to_string(g.edge_count()), format_real(d), format_real(fro),
                                format_real(residual), u64_str(net_seed)});
                    gnuplot_block[oi] += format_real(d) + " " + format_real(fro) + "\n";
                    auto [it, inserted] = max_residual.try_emplace(oi, 0.0);
                    it->second = std::max(it->second, std::fabs(residual));
                } catch (const Error& e) {
                    res.failures.push_back("network " + std::to_string(index) + " sigma_offset " +
                                           format_real(cfg.sigma_offsets[oi]) + ": " + e.what());
                }
            }
        }
    }
    for (const auto& [oi, worst] : max_residual) {
        const std::string key = "max_residual[sigma_offset=" + format_real(cfg.sigma_offsets[oi]) + "]";
        res.stats[key] = worst;
        res.summary.push_back(key + " = " + format_real(worst));
    }
    for (const auto& [oi, block] : gnuplot_block) {
        res.gnuplot += "# sigma_offset=" + format_real(cfg.sigma_offsets[oi]) + "\n" + block + "\n";
    }
    return res;
}

// ---------------------------------------------------------------------------
// equivalence: (plain | resolution | self-loop) score vs divergence objective
// ---------------------------------------------------------------------------

ExperimentResult run_equivalence_q_kl(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.csv = "network_index,z_out,param,n,m,q_value,kl_value,seed\n";
    res.gnuplot = "# q_value kl_value (one block per param)\n";
    const auto values = sweep_values(cfg);
    if (values.empty()) throw ParamError("empty sweep");

    std::vector<double> params;
    switch (cfg.family) {
        case ExperimentFamily::q_kl:
            params = {0.0};
            break;
        case ExperimentFamily::q_rb_kl:
            params = cfg.gamma;
            break;
        case ExperimentFamily::q_afg_kl:
            params = cfg.selfloop;
            break;
        default:
            throw ParamError("divergence runner called with a non-divergence family");
    }
    if (params.empty()) throw ParamError("empty parameter list");

    std::vector<std::vector<double>> xs(params.size()), ys(params.size());
    for (std::size_t sweep_idx = 0; sweep_idx < values.size(); ++sweep_idx) {
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            const std::size_t index = sweep_idx * static_cast<std::size_t>(cfg.repeats) +
                                      static_cast<std::size_t>(rep);
            const std::uint64_t net_seed = substream_seed(cfg.seed, index);
            Graph g;
            Partition planted;
            try {
                std::tie(g, planted) = make_network(cfg, sweep_idx, values[sweep_idx], net_seed);
            } catch (const Error& e) {
                res.failures.push_back("network " + std::to_string(index) + " (z_out " +
                                       format_real(values[sweep_idx]) + "): " + e.what());
                continue;
            }
            const MembershipMatrix s = partition_to_membership(planted);
            for (std::size_t pi = 0; pi < params.size(); ++pi) {
                try {
                    double q = 0.0;
                    NullModel null;
                    switch (cfg.family) {
                        case ExperimentFamily::q_kl:
                            q = modularity_q(g, planted);
                            null = constant_null(g, NullKind::constant);
                            break;
                        case ExperimentFamily::q_rb_kl:
                            q = q_rb(g, planted, params[pi]);
                            null = constant_null(g, NullKind::scaled_constant, params[pi]);
                            break;
                        default:
                            q = q_afg(g, planted, params[pi]);
                            null = constant_null(g, NullKind::selfloop_constant, params[pi]);
                            break;
                    }
                    const double kl = kl_objective(g, null, s);
                    const std::string q_str = format_real(q);
                    append_row(res.csv, {std::to_string(index), format_real(values[sweep_idx]),
                                         format_real(params[pi]), std::to_string(g.node_count()),
                                         std::to_string(g.edge_count()), q_str, format_real(kl),
                                         u64_str(net_seed)});
                    xs[pi].push_back(q);
                    ys[pi].push_back(kl);
                    if (cfg.audit && cfg.family == ExperimentFamily::q_kl)
                        audit_q_value(g, planted, q_str, "network " + std::to_string(index),
                                      res.failures);
                } catch (const Error& e) {
                    res.failures.push_back("network " + std::to_string(index) + " param " +
                                           format_real(params[pi]) + ": " + e.what());
                }
            }
        }
    }
    std::map<std::size_t, std::string> gnuplot_block;
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        for (std::size_t t = 0; t < xs[pi].size(); ++t)
            gnuplot_block[pi] += format_real(xs[pi][t]) + " " + format_real(ys[pi][t]) + "\n";
        const std::string key = "pearson_r[param=" + format_real(params[pi]) + "]";
        try {
            const double r = pearson(xs[pi], ys[pi]);
            res.stats[key] = r;
            res.summary.push_back(key + " = " + format_real(r) + " over " +
                                  std::to_string(xs[pi].size()) + " networks");
        } catch (const Error& e) {
            res.failures.push_back(key + ": correlation unavailable: " + e.what());
        }
    }
    for (const auto& [pi, block] : gnuplot_block)
        res.gnuplot += "# param=" + format_real(params[pi]) + "\n" + block + "\n";
    return res;
}

// ---------------------------------------------------------------------------
// detection benchmark
// ---------------------------------------------------------------------------

ExperimentResult run_benchmark(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.csv = "sweep_value,algorithm,mean_nmi,runs,networks,seed\n";
    res.gnuplot = "# sweep_value mean_nmi (one block per algorithm)\n";
    const auto values = sweep_values(cfg);
    if (values.empty()) throw ParamError("empty sweep");
    if (cfg.algorithms.empty()) throw ParamError("benchmark needs at least one algorithm");

    std::map<std::size_t, std::string> gnuplot_block;
    for (std::size_t sweep_idx = 0; sweep_idx < values.size(); ++sweep_idx) {
        std::vector<double> sum(cfg.algorithms.size(), 0.0);
        std::vector<long long> count(cfg.algorithms.size(), 0);
        std::vector<int> networks(cfg.algorithms.size(), 0);
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            const std::size_t index = sweep_idx * static_cast<std::size_t>(cfg.repeats) +
                                      static_cast<std::size_t>(rep);
            const std::uint64_t net_seed = substream_seed(cfg.seed, index);
            Graph g;
            Partition planted;
            try {
                std::tie(g, planted) = make_network(cfg, sweep_idx, values[sweep_idx], net_seed);
            } catch (const Error& e) {
                res.failures.push_back("network " + std::to_string(index) + " (sweep_value " +
                                       format_real(values[sweep_idx]) + "): " + e.what());
                continue;
            }
            for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
                const std::string& algo = cfg.algorithms[ai];
                try {
                    if (algo == "fast-greedy") {
                        const Partition p = fast_greedy(g);
                        sum[ai] += nmi(planted, p);
                        count[ai] += 1;
                    } else {
                        // each run is an independent single-start solve; the
                        // point value is their plain average
                        const std::uint64_t algo_stream = substream_seed(net_seed, ai + 1);
                        for (int run = 0; run < cfg.runs; ++run) {
                            SolverConfig sc;
                            sc.c = planted.community_count();
                            sc.iters = cfg.iters;
                            sc.runs = 1;
                            sc.seed = substream_seed(algo_stream, static_cast<std::uint64_t>(run));
                            sc.record_objective = false;
                            const auto [p, trace] = (algo == "q-nmf")
                                                        ? detect_q_nmf(g, sc)
                                                        : detect_d_nmf(g, sc);
                            sum[ai] += nmi(planted, p);
                            count[ai] += 1;
                        }
                    }
                    networks[ai] += 1;
                } catch (const Error& e) {
                    res.failures.push_back("sweep_value " + format_real(values[sweep_idx]) +
                                           " network " + std::to_string(index) + " algorithm " +
                                           algo + ": " + e.what());
                }
            }
        }
        for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
            if (count[ai] == 0) continue;  // cell missing; failure already logged
            const double mean = sum[ai] / static_cast<double>(count[ai]);
            const int runs_per_network = (cfg.algorithms[ai] == "fast-greedy") ? 1 : cfg.runs;
            append_row(res.csv, {format_real(values[sweep_idx]), cfg.algorithms[ai],
                                 format_real(mean), std::to_string(runs_per_network),
                                 std::to_string(networks[ai]), u64_str(cfg.seed)});
            res.benchmark_cells.push_back({values[sweep_idx], cfg.algorithms[ai], mean,
                                           runs_per_network, networks[ai]});
            gnuplot_block[ai] += format_real(values[sweep_idx]) + " " + format_real(mean) + "\n";
        }
    }
    for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
        if (!gnuplot_block.count(ai)) continue;
        res.gnuplot += "# algorithm=" + cfg.algorithms[ai] + "\n" + gnuplot_block[ai] + "\n";
    }
    for (const auto& cell : res.benchmark_cells)
        res.summary.push_back("sweep_value " + format_real(cell.sweep_value) + " " + cell.algorithm +
                              ": mean nmi " + format_real(cell.mean_nmi) + " (" +
                              std::to_string(cell.networks) + " networks x " +
                              std::to_string(cell.runs) + " runs)");
    return res;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    switch (cfg.family) {
        case ExperimentFamily::q_frobenius:
            return run_equivalence_q_frobenius(cfg);
        case ExperimentFamily::d_frobenius:
            return run_equivalence_d_frobenius(cfg);
        case ExperimentFamily::q_kl:
        case ExperimentFamily::q_rb_kl:
        case ExperimentFamily::q_afg_kl:
            return run_equivalence_q_kl(cfg);
        case ExperimentFamily::benchmark:
            return run_benchmark(cfg);
    }
    throw ParamError("unreachable family");
}

}  // namespace modnmf
