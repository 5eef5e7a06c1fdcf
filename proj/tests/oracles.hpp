#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is written straight from the defining formulas with dense
// double loops and its own little dense algebra — deliberately slow and
// deliberately sharing no code path with the evaluators under test.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "modnmf/graph.hpp"
#include "modnmf/objectives.hpp"
#include "modnmf/rng.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense dense_adjacency(const modnmf::Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    Dense a(n, std::vector<double>(n, 0.0));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1.0;
        a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1.0;
    }
    return a;
}

inline std::vector<double> degrees_of(const Dense& a) {
    std::vector<double> k(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) k[i] += a[i][j];
    return k;
}

inline Dense dense_mult(const Dense& x, const Dense& y) {
    const std::size_t n = x.size(), m = y[0].size(), inner = y.size();
    Dense out(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
}

inline Dense dense_transpose(const Dense& x) {
    Dense out(x[0].size(), std::vector<double>(x.size(), 0.0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[0].size(); ++j) out[j][i] = x[i][j];
    return out;
}

inline double dense_trace(const Dense& x) {
    double t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += x[i][i];
    return t;
}

// binary indicator columns, one per community label 1..c
inline Dense indicator(const modnmf::Partition& p) {
    const auto n = static_cast<std::size_t>(p.node_count());
    const auto c = static_cast<std::size_t>(p.community_count());
    Dense s(n, std::vector<double>(c, 0.0));
    for (std::size_t i = 0; i < n; ++i) s[i][static_cast<std::size_t>(p.label(static_cast<int>(i)) - 1)] = 1.0;
    return s;
}

// indicator columns divided by sqrt(community size)
inline Dense normalized_indicator(const modnmf::Partition& p) {
    Dense h = indicator(p);
    for (int r = 1; r <= p.community_count(); ++r) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(p.community_size(r)));
        for (auto& row : h) row[static_cast<std::size_t>(r - 1)] *= scale;
    }
    return h;
}

// (1/2m') sum_ij (A'_ij - gamma k'_i k'_j / 2m') delta(g_i, g_j), where the
// self-loop weight is added to the diagonal before anything else is computed
inline double q_pair_sum(const modnmf::Graph& g, const modnmf::Partition& p, double gamma = 1.0,
                         double selfloop = 0.0) {
    Dense a = dense_adjacency(g);
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += selfloop;
    const std::vector<double> k = degrees_of(a);
    double two_m = 0.0;
    for (double ki : k) two_m += ki;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (p.label(static_cast<int>(i)) == p.label(static_cast<int>(j)))
                acc += a[i][j] - gamma * k[i] * k[j] / two_m;
    return acc / two_m;
}

// sum_ij (2m A_ij - k_i k_j) delta(g_i, g_j)
inline double q_star_pair_sum(const modnmf::Graph& g, const modnmf::Partition& p) {
    const Dense a = dense_adjacency(g);
    const std::vector<double> k = degrees_of(a);
    double two_m = 0.0;
    for (double ki : k) two_m += ki;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (p.label(static_cast<int>(i)) == p.label(static_cast<int>(j)))
                acc += two_m * a[i][j] - k[i] * k[j];
    return acc;
}

// Tr(S^T (2m A - b b^T) S) evaluated by explicit dense products
inline double q_star_trace(const modnmf::Graph& g, const modnmf::Partition& p) {
    const Dense a = dense_adjacency(g);
    const std::vector<double> k = degrees_of(a);
    double two_m = 0.0;
    for (double ki : k) two_m += ki;
    const std::size_t n = a.size();
    Dense target(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) target[i][j] = two_m * a[i][j] - k[i] * k[j];
    const Dense s = indicator(p);
    return dense_trace(dense_mult(dense_transpose(s), dense_mult(target, s)));
}

// sum over communities of (within-degree - escaping-degree) / community size,
// each node's counts taken straight from the adjacency rows
inline double density_by_definition(const modnmf::Graph& g, const modnmf::Partition& p) {
    const Dense a = dense_adjacency(g);
    double acc = 0.0;
    for (int r = 1; r <= p.community_count(); ++r) {
        double numer = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (p.label(static_cast<int>(i)) != r) continue;
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (a[i][j] == 0.0) continue;
                numer += (p.label(static_cast<int>(j)) == r) ? 1.0 : -1.0;
            }
        }
        acc += numer / static_cast<double>(p.community_size(r));
    }
    return acc;
}

// Tr(H^T W1 H) - sigma*c with W1 = sigma I + 2A - B, explicit dense products
inline double density_trace(const modnmf::Graph& g, const modnmf::Partition& p, double sigma) {
    const Dense a = dense_adjacency(g);
    const std::vector<double> k = degrees_of(a);
    const std::size_t n = a.size();
    Dense w1(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w1[i][j] = 2.0 * a[i][j] + ((i == j) ? sigma - k[i] : 0.0);
    const Dense h = normalized_indicator(p);
    const double trace = dense_trace(dense_mult(dense_transpose(h), dense_mult(w1, h)));
    return trace - sigma * static_cast<double>(p.community_count());
}

// ||W - M M^T||_F^2 with the product materialized entry by entry
inline double frobenius_entrywise(const modnmf::Matrix& w, const modnmf::Matrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) {
            double prod = 0.0;
            for (std::size_t r = 0; r < m.cols(); ++r) prod += m(i, r) * m(j, r);
            const double diff = w(i, j) - prod;
            acc += diff * diff;
        }
    }
    return acc;
}

// divergence objective straight from its formula: shift the diagonal for the
// self-loop null, include exactly the ordered pairs where (SS^T)_ij > 0
inline double kl_entrywise(const modnmf::Graph& g, const modnmf::NullModel& null,
                           const modnmf::Matrix& s) {
    Dense a = dense_adjacency(g);
    double scale = static_cast<double>(g.total_degree());
    if (null.kind == modnmf::NullKind::selfloop_constant) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += null.shift;
        scale += static_cast<double>(g.node_count()) * null.shift;
    }
    Dense sd(s.rows(), std::vector<double>(s.cols(), 0.0));
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t r = 0; r < s.cols(); ++r) sd[i][r] = s(i, r);
    const Dense sst = dense_mult(sd, dense_transpose(sd));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (sst[i][j] <= 0.0) continue;
            const double value = a[i][j];
            if (value > 0.0)
                acc += value * std::log(value / null.value) - value + null.value;
            else
                acc += null.value;
        }
    }
    return acc / scale;
}

namespace detail {
inline void rgs_rec(std::size_t i, int used, int max_c, std::vector<int>& labels,
                    std::vector<std::vector<int>>& out) {
    if (i == labels.size()) {
        out.push_back(labels);
        return;
    }
    for (int r = 1; r <= std::min(used + 1, max_c); ++r) {
        labels[i] = r;
        rgs_rec(i + 1, std::max(used, r), max_c, labels, out);
    }
}
}  // namespace detail

// every partition of {0..n-1} into at most max_c non-empty blocks, as
// restricted-growth label strings (first occurrences in increasing order)
inline std::vector<std::vector<int>> all_partitions(int n, int max_c) {
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    detail::rgs_rec(0, 0, max_c, labels, out);
    return out;
}

inline double max_q_bruteforce(const modnmf::Graph& g) {
    double best = -2.0;
    for (const auto& labels : all_partitions(g.node_count(), g.node_count()))
        best = std::max(best, q_pair_sum(g, modnmf::Partition::from_labels(labels)));
    return best;
}

// G(n, p) with a guaranteed edge so 2m > 0
inline modnmf::Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    modnmf::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(edge_prob)) edges.emplace_back(i, j);
    if (edges.empty()) edges.emplace_back(0, 1);
    return modnmf::Graph::from_edge_list(edges, n);
}

inline modnmf::Partition random_partition(int n, int c, modnmf::Rng& rng) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
    return modnmf::Partition::from_labels(labels);
}

// the running toy example: two disjoint triangles {0,1,2} and {3,4,5}
inline modnmf::Graph two_triangles() {
    return modnmf::Graph::from_edge_list({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, 6);
}

inline modnmf::Partition triangle_split() {
    return modnmf::Partition::from_labels({1, 1, 1, 2, 2, 2});
}

}  // namespace oracle
