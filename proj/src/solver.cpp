#include "modnmf/solver.hpp"

#include <string>

#include "modnmf/rng.hpp"

namespace modnmf {

namespace {

void validate_config(const SolverConfig& cfg) {
    if (cfg.c < 1) throw ParamError("solver needs c >= 1");
    if (cfg.iters < 1) throw ParamError("solver needs iters >= 1");
    if (cfg.runs < 1) throw ParamError("solver needs runs >= 1");
    if (!(cfg.eps > 0.0)) throw ParamError("solver needs eps > 0");
}

}  // namespace

void multiplicative_step(const Matrix& w, Matrix& s, double eps) {
    const Matrix ws = multiply(w, s);
    const Matrix sts = gram(s);
    const Matrix ssts = multiply(s, sts);
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t r = 0; r < s.cols(); ++r)
            s(i, r) = s(i, r) * ws(i, r) / (ssts(i, r) + eps);
}

SolveTrace symnmf_multiplicative(const TargetMatrix& w, const SolverConfig& cfg) {
    validate_config(cfg);
    const std::size_t n = w.entries.rows();
    if (w.entries.cols() != n) throw ShapeError("target matrix must be square");
    for (double v : w.entries.data())
        if (v < 0.0) throw NegativeInputError("target matrix has a negative entry");

    const auto c = static_cast<std::size_t>(cfg.c);
    Rng rng(cfg.seed);
    Matrix s(n, c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < c; ++r) s(i, r) = rng.next_double() + cfg.eps;

    SolveTrace trace;
    if (cfg.record_objective) trace.objective.reserve(static_cast<std::size_t>(cfg.iters));
    for (int it = 0; it < cfg.iters; ++it) {
        if (cfg.record_objective) trace.objective.push_back(frobenius_diff_sq(w.entries, s));
        multiplicative_step(w.entries, s, cfg.eps);
    }
    trace.final_objective = frobenius_diff_sq(w.entries, s);
    trace.final_s = {std::move(s), MembershipKind::continuous_iterate};
    return trace;
}

Partition extract_partition(const MembershipMatrix& s) {
    const std::size_t n = s.entries.rows(), c = s.entries.cols();
    std::vector<int> labels(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double best_v = s.entries(i, 0);
        for (std::size_t r = 1; r < c; ++r) {
            if (s.entries(i, r) > best_v) {  // strict: ties keep the lowest index
                best_v = s.entries(i, r);
                best = r;
            }
        }
        if (best_v == 0.0)
            throw AmbiguousRowError("row " + std::to_string(i) + " is all zero; no argmax");
        labels[i] = static_cast<int>(best) + 1;
    }
    return Partition::from_labels(labels);  // compacts empty communities away
}

namespace {

std::pair<Partition, SolveTrace> detect_with(const TargetMatrix& w, const SolverConfig& cfg) {
    SolveTrace best;
    bool have = false;
    for (int run = 0; run < cfg.runs; ++run) {
        SolverConfig run_cfg = cfg;
        run_cfg.seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(run));
        SolveTrace t = symnmf_multiplicative(w, run_cfg);
        t.chosen_run = run;
        if (!have || t.final_objective < best.final_objective) {
            best = std::move(t);
            have = true;
        }
    }
    Partition p = extract_partition(best.final_s);
    return {std::move(p), std::move(best)};
}

}  // namespace

std::pair<Partition, SolveTrace> detect_q_nmf(const Graph& g, const SolverConfig& cfg) {
    validate_config(cfg);
    return detect_with(build_w_star(g), cfg);
}

std::pair<Partition, SolveTrace> detect_d_nmf(const Graph& g, const SolverConfig& cfg,
                                              std::optional<double> sigma) {
    validate_config(cfg);
    return detect_with(build_w1(g, sigma), cfg);
}

}  // namespace modnmf
