#include "modnmf/objectives.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace modnmf {

namespace {

// ordered within-community adjacent pair count (stay_r) and total degree
// (d_r) per community; accumulation order is fixed by ascending node id
struct CommunityAggregates {
    std::vector<double> stay;
    std::vector<double> dsum;
};

CommunityAggregates aggregate(const Graph& g, const Partition& p) {
    const auto c = static_cast<std::size_t>(p.community_count());
    CommunityAggregates agg{std::vector<double>(c, 0.0), std::vector<double>(c, 0.0)};
    for (int i = 0; i < g.node_count(); ++i) {
        const auto r = static_cast<std::size_t>(p.label(i) - 1);
        agg.dsum[r] += static_cast<double>(g.degree(i));
        for (int j : g.neighbors(i))
            if (p.label(j) == p.label(i)) agg.stay[r] += 1.0;
    }
    return agg;
}

// One evaluator backs the plain score and both parameterized variants, so the
// gamma = 1 and selfloop = 0 reductions hold bit-for-bit, not just within
// tolerance. Adjacency gains `selfloop` on the diagonal, degrees become
// k_i + selfloop, the total becomes 2m + n*selfloop, and the null term is
// scaled by gamma.
double q_general(const Graph& g, const Partition& p, double gamma, double selfloop) {
    if (g.edge_count() == 0) throw EmptyGraphError("modularity needs at least one edge");
    if (g.node_count() != p.node_count())
        throw ShapeError("graph and partition disagree on node count");
    const auto agg = aggregate(g, p);
    const double two_mt =
        static_cast<double>(g.total_degree()) + static_cast<double>(g.node_count()) * selfloop;
    double acc = 0.0;
    for (std::size_t r = 0; r < agg.stay.size(); ++r) {
        const double nr = static_cast<double>(p.community_size(static_cast<int>(r) + 1));
        const double stay = agg.stay[r] + nr * selfloop;
        const double dsum = agg.dsum[r] + nr * selfloop;
        acc += stay - gamma * (dsum * dsum) / two_mt;
    }
    return acc / two_mt;
}

}  // namespace

double modularity_q(const Graph& g, const Partition& p) { return q_general(g, p, 1.0, 0.0); }

double q_rb(const Graph& g, const Partition& p, double gamma) {
    return q_general(g, p, gamma, 0.0);
}

double q_afg(const Graph& g, const Partition& p, double r) { return q_general(g, p, 1.0, r); }

double modularity_q_star(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0) throw EmptyGraphError("modularity needs at least one edge");
    if (g.node_count() != p.node_count())
        throw ShapeError("graph and partition disagree on node count");
    const auto agg = aggregate(g, p);
    const double two_m = static_cast<double>(g.total_degree());
    double acc = 0.0;
    for (std::size_t r = 0; r < agg.stay.size(); ++r)
        acc += two_m * agg.stay[r] - agg.dsum[r] * agg.dsum[r];
    return acc;
}

double modularity_density(const Graph& g, const Partition& p) {
    if (g.node_count() != p.node_count())
        throw ShapeError("graph and partition disagree on node count");
    if (p.community_count() == 0) throw EmptyCommunityError("partition has no communities");
    const auto agg = aggregate(g, p);
    double acc = 0.0;
    for (std::size_t r = 0; r < agg.stay.size(); ++r) {
        const double nr = static_cast<double>(p.community_size(static_cast<int>(r) + 1));
        // stay - escape = 2*stay - d
        acc += (2.0 * agg.stay[r] - agg.dsum[r]) / nr;
    }
    return acc;
}

TargetMatrix build_w_star(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    Matrix w(n, n);
    for (int i = 0; i < g.node_count(); ++i) {
        const int k = g.degree(i);
        if (k == 0) throw IsolatedNodeError("node " + std::to_string(i) + " has degree 0");
        const double inv_k = 1.0 / static_cast<double>(k);
        for (int j : g.neighbors(i)) w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = inv_k;
    }
    return {std::move(w), TargetTag::w_star, 0.0};
}

TargetMatrix build_w1(const Graph& g, std::optional<double> sigma) {
    const double max_deg = static_cast<double>(g.max_degree());
    const double s = sigma.value_or(max_deg);
    if (s < max_deg)
        throw SigmaTooSmallError("sigma " + std::to_string(s) + " below max degree " +
                                 std::to_string(g.max_degree()));
    const auto n = static_cast<std::size_t>(g.node_count());
    Matrix w(n, n);
    for (int i = 0; i < g.node_count(); ++i) {
        w(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            s - static_cast<double>(g.degree(i));
        for (int j : g.neighbors(i))
            w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 2.0;
    }
    return {std::move(w), TargetTag::w1, s};
}

double frobenius_objective(const TargetMatrix& w, const MembershipMatrix& m) {
    return frobenius_diff_sq(w.entries, m.entries);
}

NullModel constant_null(const Graph& g, NullKind kind, double param) {
    if (g.edge_count() == 0) throw EmptyGraphError("constant null needs at least one edge");
    const double two_m = static_cast<double>(g.total_degree());
    const double n = static_cast<double>(g.node_count());
    const double kbar = two_m / n;
    NullModel null;
    null.kind = kind;
    switch (kind) {
        case NullKind::constant:
            null.value = kbar * kbar / two_m;
            break;
        case NullKind::scaled_constant:
            null.gamma = param;
            null.value = param * (kbar * kbar / two_m);
            break;
        case NullKind::selfloop_constant:
            null.shift = param;
            null.value = (kbar + param) * (kbar + param) / (two_m + n * param);
            break;
        case NullKind::config_product:
            throw InvalidNullError("config-product null carries no constant value");
    }
    if (null.value <= 0.0) throw InvalidNullError("null value must be positive");
    null.entropy_shift = null.value - null.value * std::log(null.value);
    return null;
}

double kl_objective(const Graph& g, const NullModel& null, const MembershipMatrix& s) {
    if (null.kind == NullKind::config_product)
        throw InvalidNullError("divergence objective requires a constant null kind");
    const double p_const = null.value;
    if (!(p_const > 0.0)) throw InvalidNullError("null value must be positive");
    if (g.edge_count() == 0) throw EmptyGraphError("divergence objective needs at least one edge");
    if (s.entries.rows() != static_cast<std::size_t>(g.node_count()))
        throw ShapeError("membership row count does not match graph");

    // self-loop kind shifts the diagonal by r and the scale by n*r; the other
    // kinds go through the same expressions with diag = 0
    const double diag = (null.kind == NullKind::selfloop_constant) ? null.shift : 0.0;
    const double inv_scale =
        static_cast<double>(g.total_degree()) + static_cast<double>(g.node_count()) * diag;

    const std::size_t n = s.entries.rows(), c = s.entries.cols();
    std::vector<std::vector<int>> members(c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < c; ++r)
            if (s.entries(i, r) > 0.0) members[r].push_back(static_cast<int>(i));

    // only within-community ordered pairs (diagonal included) have
    // (SS^T)_ij > 0; everything else is excluded by convention
    double acc = 0.0;
    for (std::size_t r = 0; r < c; ++r) {
        for (int i : members[r]) {
            for (int j : members[r]) {
                const double a = (i == j) ? diag : (g.has_edge(i, j) ? 1.0 : 0.0);
                if (a > 0.0)
                    acc += a * std::log(a / p_const) - a + p_const;
                else
                    acc += p_const;  // 0*log 0 = 0 leaves only the +P term
            }
        }
    }
    return acc / inv_scale;
}

}  // namespace modnmf
