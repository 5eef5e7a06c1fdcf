#include "modnmf/fast_greedy.hpp"

#include <map>
#include <vector>

namespace modnmf {

// Community-merge bookkeeping over edge fractions:
//   e[r][s] = (#edges between r and s) / 2m   (symmetric; e[r][r] = stay_r/2m)
//   a[r]    = d_r / 2m
// so Q = Σ_r (e[r][r] − a[r]²) and merging connected (r,s) changes Q by
// 2(e[r][s] − a[r]a[s]).
Partition fast_greedy(const Graph& g) {
    if (g.edge_count() == 0) throw EmptyGraphError("fast greedy needs at least one edge");
    const int n = g.node_count();
    const double two_m = static_cast<double>(g.total_degree());

    std::vector<std::map<int, double>> e(static_cast<std::size_t>(n));
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        members[static_cast<std::size_t>(i)] = {i};
        a[static_cast<std::size_t>(i)] = static_cast<double>(g.degree(i)) / two_m;
        for (int j : g.neighbors(i)) e[static_cast<std::size_t>(i)][j] = 1.0 / two_m;
    }

    while (true) {
        double best_dq = 0.0;
        int best_r = -1, best_s = -1;
        for (int r = 0; r < n; ++r) {
            if (!alive[static_cast<std::size_t>(r)]) continue;
            for (const auto& [s, ers] : e[static_cast<std::size_t>(r)]) {
                if (s <= r || !alive[static_cast<std::size_t>(s)]) continue;
                const double dq =
                    2.0 * (ers - a[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(s)]);
                if (dq > best_dq) {  // strict: ties keep the first (lowest) pair
                    best_dq = dq;
                    best_r = r;
                    best_s = s;
                }
            }
        }
        if (best_r < 0) break;  // no positive gain left: peak reached

        const auto r = static_cast<std::size_t>(best_r);
        const auto s = static_cast<std::size_t>(best_s);
        double ers = 0.0;
        if (auto it = e[r].find(best_s); it != e[r].end()) ers = it->second;
        e[r][best_r] += e[s].count(best_s) ? e[s][best_s] : 0.0;
        e[r][best_r] += 2.0 * ers;
        e[r].erase(best_s);
        e[s].erase(best_s);
        for (const auto& [t, val] : e[s]) {
            if (t == best_r) continue;
            e[r][t] += val;
            e[static_cast<std::size_t>(t)][best_r] += val;
            e[static_cast<std::size_t>(t)].erase(best_s);
        }
        e[s].clear();
        a[r] += a[s];
        members[r].insert(members[r].end(), members[s].begin(), members[s].end());
        members[s].clear();
        alive[s] = false;
    }

    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    int next = 1;
    for (int r = 0; r < n; ++r) {
        if (!alive[static_cast<std::size_t>(r)]) continue;
        for (int i : members[static_cast<std::size_t>(r)]) labels[static_cast<std::size_t>(i)] = next;
        ++next;
    }
    return Partition::from_labels(labels);
}

}  // namespace modnmf
