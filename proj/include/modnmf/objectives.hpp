#pragma once

#include <optional>

#include "modnmf/graph.hpp"
#include "modnmf/matrix.hpp"

namespace modnmf {

enum class TargetTag { w_star, w1, w_generic };

// Nonnegative n×n matrix handed to the factorization solver.
//  w_star:   random-walk normalization, row i is A_i / k_i (row-stochastic)
//  w1:       sigma*I + 2A - B (symmetric; sigma >= max degree keeps it nonnegative)
//  w_generic: anything else (tests, ad-hoc inputs)
struct TargetMatrix {
    Matrix entries;
    TargetTag tag = TargetTag::w_generic;
    double sigma = 0.0;  // meaningful for w1 only
};

enum class NullKind {
    config_product,    // k_i k_j / 2m (implicit in the standard quality score)
    constant,          // P = kbar^2 / 2m
    scaled_constant,   // P* = gamma * P
    selfloop_constant  // P~ = (kbar + r)^2 / (2m + n r), paired with shifted diagonal
};

// Constant-null description for the divergence objective. `entropy_shift`
// (value - value*log(value)) shows up in the derivation of the equivalence
// but is never consumed by a runtime formula; kept for documentation.
struct NullModel {
    NullKind kind = NullKind::constant;
    double value = 0.0;   // P (or P*, or P~)
    double gamma = 1.0;   // resolution parameter, scaled_constant only
    double shift = 0.0;   // diagonal self-loop weight r, selfloop_constant only
    double entropy_shift = 0.0;
};

// standard quality score, (1/2m) * sum_ij (A_ij - k_i k_j / 2m) delta(g_i, g_j)
double modularity_q(const Graph& g, const Partition& p);

// (2m)^2 * modularity_q, evaluated in integer-valued double arithmetic as
// sum_r (2m * stay_r - d_r^2)
double modularity_q_star(const Graph& g, const Partition& p);

// sum_r (stay_r - escape_r) / n_r where stay_r counts ordered within-community
// adjacent pairs and escape_r = d_r - stay_r
double modularity_density(const Graph& g, const Partition& p);

// resolution-parameter variant: null term scaled by gamma; q_rb(g,p,1) == modularity_q exactly
double q_rb(const Graph& g, const Partition& p, double gamma);

// self-loop variant: adjacency gains r on the diagonal, degrees become k_i + r,
// total 2m + n r; q_afg(g,p,0) == modularity_q exactly
double q_afg(const Graph& g, const Partition& p, double r);

// W* = B^-1 A; requires every degree positive
TargetMatrix build_w_star(const Graph& g);

// W1 = sigma*I + 2A - B; sigma defaults to the max degree (smallest valid value)
TargetMatrix build_w1(const Graph& g, std::optional<double> sigma = std::nullopt);

// ||W - M M^T||_F^2
double frobenius_objective(const TargetMatrix& w, const MembershipMatrix& m);

// Constant-null factories. `param` is gamma for scaled_constant, r for
// selfloop_constant, ignored for constant.
NullModel constant_null(const Graph& g, NullKind kind, double param = 0.0);

// Generalized-divergence objective at a binary membership, constant null.
// Sums A_ij*log(A_ij/(P*(SS^T)_ij)) - A_ij + P*(SS^T)_ij over pairs (i,j) with
// (SS^T)_ij > 0 (i.e. within-community ordered pairs, diagonal included), with
// 0*log 0 = 0, then scales by 1/2m — or by 1/(2m + n r) with the shifted
// diagonal when the null is the self-loop kind.
double kl_objective(const Graph& g, const NullModel& null, const MembershipMatrix& s);

}  // namespace modnmf
