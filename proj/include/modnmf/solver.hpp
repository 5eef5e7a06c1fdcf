#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modnmf/graph.hpp"
#include "modnmf/objectives.hpp"

namespace modnmf {

struct SolverConfig {
    int c = 1;                     // community count (factor columns)
    int iters = 500;               // multiplicative updates per run
    int runs = 10;                 // random restarts (detect_* pipelines)
    std::uint64_t seed = 0;
    double eps = 1e-12;            // division guard
    bool record_objective = true;  // trace ‖W − SSᵀ‖²_F per iteration
};

struct SolveTrace {
    // objective value at the start of each iteration (before that update);
    // empty when record_objective is off
    std::vector<double> objective;
    MembershipMatrix final_s;  // continuous iterate after the last update
    double final_objective = 0.0;
    int chosen_run = 0;  // restart index selected by the detect pipelines
};

// One in-place update S ← S ⊙ (WS) / (SSᵀS + eps). Exposed so stationarity
// can be probed from a hand-picked S.
void multiplicative_step(const Matrix& w, Matrix& s, double eps);

// One run of the multiplicative update S ← S ⊙ (WS) / (SSᵀS + eps), starting
// from i.i.d. uniform(0,1)+eps entries seeded by cfg.seed. Entries stay
// nonnegative; no monotone-decrease guarantee is asserted.
SolveTrace symnmf_multiplicative(const TargetMatrix& w, const SolverConfig& cfg);

// Row-argmax discretization; ties to the lowest community index, empty
// communities compacted away so labels are contiguous 1..c'.
Partition extract_partition(const MembershipMatrix& s);

// Factorize the row-normalized walk matrix; cfg.runs restarts with substream
// seeds derived from cfg.seed, keep the run with the lowest final objective.
std::pair<Partition, SolveTrace> detect_q_nmf(const Graph& g, const SolverConfig& cfg);

// Same pipeline on the shifted matrix build_w1(g, sigma); sigma defaults to
// the max degree.
std::pair<Partition, SolveTrace> detect_d_nmf(const Graph& g, const SolverConfig& cfg,
                                              std::optional<double> sigma = std::nullopt);

}  // namespace modnmf
