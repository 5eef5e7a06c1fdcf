#include "modnmf/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "modnmf/rng.hpp"

namespace modnmf {

namespace {

void validate_sbm(const SbmParams& params) {
    const std::size_t c = params.sizes.size();
    if (c == 0) throw ParamError("block model needs at least one community");
    for (int s : params.sizes)
        if (s < 1) throw ParamError("community sizes must be >= 1");
    if (params.theta.rows() != c || params.theta.cols() != c)
        throw ParamError("theta must be c x c");
    for (std::size_t r = 0; r < c; ++r) {
        for (std::size_t t = 0; t < c; ++t) {
            const double v = params.theta(r, t);
            if (!(v >= 0.0 && v <= 1.0)) throw ParamError("theta entries must lie in [0,1]");
            if (params.theta(r, t) != params.theta(t, r))
                throw ParamError("theta must be symmetric");
        }
    }
}

}  // namespace

std::pair<Graph, Partition> sample_sbm(const SbmParams& params, std::uint64_t seed) {
    validate_sbm(params);
    const int n = std::accumulate(params.sizes.begin(), params.sizes.end(), 0);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < params.sizes.size(); ++r)
        labels.insert(labels.end(), static_cast<std::size_t>(params.sizes[r]),
                      static_cast<int>(r) + 1);

    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        const auto ri = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1);
        for (int j = i + 1; j < n; ++j) {
            const auto rj = static_cast<std::size_t>(labels[static_cast<std::size_t>(j)] - 1);
            if (rng.bernoulli(params.theta(ri, rj))) edges.emplace_back(i, j);
        }
    }
    return {Graph::from_edge_list(edges, n), Partition::from_labels(labels)};
}

SbmParams GnParams::to_sbm() const {
    SbmParams p;
    p.sizes = {32, 32, 32, 32};
    p.theta = Matrix(4, 4);
    const double within = (16.0 - z_out) / 32.0;
    const double across = z_out / 96.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t t = 0; t < 4; ++t) p.theta(r, t) = (r == t) ? within : across;
    return p;
}

std::pair<Graph, Partition> sample_gn(double z_out, std::uint64_t seed) {
    if (!(z_out >= 0.0 && z_out <= 16.0))
        throw ParamError("z_out must lie in [0,16], got " + std::to_string(z_out));
    return sample_sbm(GnParams{z_out}.to_sbm(), seed);
}

namespace {

// mean of the continuous power-law density x^-2 truncated to [a, b]
double truncated_mean(double a, double b) {
    return a * b * std::log(b / a) / (b - a);
}

// solve for the lower cutoff so the truncated mean equals k
double solve_kmin(double k, double maxk) {
    double lo = 1.0, hi = maxk;
    if (truncated_mean(lo, maxk) >= k) return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (truncated_mean(mid, maxk) < k)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct StubWiring {
    std::set<std::pair<int, int>> edges;  // normalized (min,max)

    bool has(int u, int v) const {
        return edges.count({std::min(u, v), std::max(u, v)}) != 0;
    }
    void add(int u, int v) { edges.insert({std::min(u, v), std::max(u, v)}); }
    void remove(int u, int v) { edges.erase({std::min(u, v), std::max(u, v)}); }
};

// Configuration-model matching of `stubs` (node ids, one per half-edge).
// `valid` decides whether a proposed pair may become an edge. Repeatedly
// shuffles and pairs; pairs that fail go back into the pool. After the
// shuffle passes, attempts bounded edge-swap repairs against already accepted
// edges from `pool`. Unresolved stubs are dropped (degree shortfall is small
// and tolerated downstream).
template <typename Valid>
void wire_stubs(std::vector<int> stubs, StubWiring& wiring, std::vector<std::pair<int, int>>& pool,
                Rng& rng, Valid valid) {
    if (stubs.size() % 2 == 1) {
        rng.shuffle(stubs);
        stubs.pop_back();  // odd half-edge count: drop one at random
    }
    const int shuffle_passes = 60;
    for (int pass = 0; pass < shuffle_passes && stubs.size() >= 2; ++pass) {
        rng.shuffle(stubs);
        std::vector<int> bad;
        for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
            const int u = stubs[t], v = stubs[t + 1];
            if (u != v && !wiring.has(u, v) && valid(u, v)) {
                wiring.add(u, v);
                pool.emplace_back(u, v);
            } else {
                bad.push_back(u);
                bad.push_back(v);
            }
        }
        stubs.swap(bad);
    }
    // swap repair: (u,v) unplaceable + accepted edge (x,y) → (u,x) + (v,y)
    std::vector<int> leftovers;
    for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
        const int u = stubs[t], v = stubs[t + 1];
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed && !pool.empty(); ++attempt) {
            const auto idx = static_cast<std::size_t>(rng.below(pool.size()));
            auto [x, y] = pool[idx];
            if (rng.bernoulli(0.5)) std::swap(x, y);
            if (u == x || v == y) continue;
            wiring.remove(x, y);
            const bool ok_ux = !wiring.has(u, x) && valid(u, x);
            const bool ok_vy = !wiring.has(v, y) && valid(v, y);
            const bool same_pair = std::minmax(u, x) == std::minmax(v, y);
            if (ok_ux && ok_vy && !same_pair) {
                wiring.add(u, x);
                wiring.add(v, y);
                pool[idx] = pool.back();
                pool.pop_back();
                pool.emplace_back(u, x);
                pool.emplace_back(v, y);
                placed = true;
            } else {
                wiring.add(x, y);  // revert
            }
        }
        if (!placed) {
            leftovers.push_back(u);
            leftovers.push_back(v);
        }
    }
    // leftovers dropped
    (void)leftovers;
}

}  // namespace

std::pair<Graph, Partition> sample_lfr(const LfrParams& params, std::uint64_t seed) {
    if (params.n < 1) throw ParamError("n must be >= 1");
    if (!(params.mu >= 0.0 && params.mu <= 1.0)) throw ParamError("mu must lie in [0,1]");
    if (params.minc < 1 || params.minc > params.maxc || params.maxc > params.n)
        throw ParamError("need 1 <= minc <= maxc <= n");
    if (!(params.k >= 1.0) || params.k > static_cast<double>(params.maxk) ||
        params.maxk >= params.n)
        throw ParamError("need 1 <= k <= maxk < n");

    Rng rng(seed);
    const auto n = static_cast<std::size_t>(params.n);
    const double maxk = static_cast<double>(params.maxk);
    const double kmin = solve_kmin(params.k, maxk);

    // degrees: inverse-CDF draws from the truncated x^-2 law, rounded
    std::vector<int> degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_double();
        const double x = 1.0 / (1.0 / kmin - u * (1.0 / kmin - 1.0 / maxk));
        degree[i] = std::clamp(static_cast<int>(std::lround(x)), 1, params.maxk);
    }
    std::vector<int> internal(n);
    for (std::size_t i = 0; i < n; ++i)
        internal[i] = static_cast<int>(
            std::ceil((1.0 - params.mu) * static_cast<double>(degree[i]) - 1e-12));

    // community sizes: truncated x^-1 law until the total covers n
    std::vector<int> sizes;
    int total = 0;
    while (total < params.n) {
        const double u = rng.next_double();
        const double x = static_cast<double>(params.minc) *
                         std::pow(static_cast<double>(params.maxc) / params.minc, u);
        int s = std::clamp(static_cast<int>(std::lround(x)), params.minc, params.maxc);
        if (total + s > params.n) s = params.n - total;  // trim the last draw
        sizes.push_back(s);
        total += s;
    }
    // a trimmed runt below minc merges into its neighbor when capacity allows
    if (sizes.size() >= 2 && sizes.back() < params.minc &&
        sizes[sizes.size() - 2] + sizes.back() <= params.maxc) {
        sizes[sizes.size() - 2] += sizes.back();
        sizes.pop_back();
    }
    const auto c = static_cast<int>(sizes.size());

    // assignment: nodes in random order, stable-sorted by internal stub count
    // descending (heavy nodes first — random order is routinely infeasible),
    // each into a random community with room that can host its internal stubs
    std::vector<int> labels(n, 0);
    const int assignment_retries = 50;
    bool assigned = false;
    for (int attempt = 0; attempt < assignment_retries && !assigned; ++attempt) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return internal[static_cast<std::size_t>(a)] >
                                                    internal[static_cast<std::size_t>(b)]; });
        std::vector<int> room(static_cast<std::size_t>(c));
        for (int r = 0; r < c; ++r) room[static_cast<std::size_t>(r)] = sizes[static_cast<std::size_t>(r)];
        std::fill(labels.begin(), labels.end(), 0);
        bool ok = true;
        std::vector<int> feasible;
        for (int i : order) {
            feasible.clear();
            for (int r = 0; r < c; ++r) {
                if (room[static_cast<std::size_t>(r)] > 0 &&
                    internal[static_cast<std::size_t>(i)] <= sizes[static_cast<std::size_t>(r)] - 1)
                    feasible.push_back(r);
            }
            if (feasible.empty()) {
                ok = false;
                break;
            }
            const int r = feasible[static_cast<std::size_t>(rng.below(feasible.size()))];
            labels[static_cast<std::size_t>(i)] = r + 1;
            --room[static_cast<std::size_t>(r)];
        }
        assigned = ok;
    }
    if (!assigned)
        throw GenerationError("could not place nodes into communities after " +
                              std::to_string(assignment_retries) + " attempts; try another seed");

    // wire internal stubs per community, then external stubs across communities
    StubWiring wiring;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < n; ++i)
        members[static_cast<std::size_t>(labels[i] - 1)].push_back(static_cast<int>(i));

    for (int r = 0; r < c; ++r) {
        std::vector<int> stubs;
        for (int i : members[static_cast<std::size_t>(r)])
            stubs.insert(stubs.end(), static_cast<std::size_t>(internal[static_cast<std::size_t>(i)]),
                         i);
        std::vector<std::pair<int, int>> pool;
        wire_stubs(std::move(stubs), wiring, pool, rng, [&](int u, int v) {
            return labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)];
        });
    }
    {
        std::vector<int> stubs;
        for (std::size_t i = 0; i < n; ++i)
            stubs.insert(stubs.end(),
                         static_cast<std::size_t>(degree[i] - internal[i]), static_cast<int>(i));
        std::vector<std::pair<int, int>> pool;
        wire_stubs(std::move(stubs), wiring, pool, rng, [&](int u, int v) {
            return labels[static_cast<std::size_t>(u)] != labels[static_cast<std::size_t>(v)];
        });
    }

    std::vector<std::pair<int, int>> edges(wiring.edges.begin(), wiring.edges.end());
    return {Graph::from_edge_list(edges, params.n), Partition::from_labels(labels)};
}

}  // namespace modnmf
