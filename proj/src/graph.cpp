#include "modnmf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace modnmf {

Graph Graph::from_edge_list(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n < 0) throw IndexError("node count must be nonnegative");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v) throw SelfLoopError("self-loop at node " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw DuplicateEdgeError("duplicate edge in input");
    }
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max<int>(best, static_cast<int>(nbrs.size()));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Matrix Graph::dense_adjacency() const {
    const auto n = static_cast<std::size_t>(node_count());
    Matrix a(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (int v : adj_[u]) a(u, static_cast<std::size_t>(v)) = 1.0;
    return a;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    Partition p;
    if (labels.empty()) return p;
    std::map<int, int> remap;  // original label → compact 1..c, numeric order
    for (int l : labels) {
        if (l < 1) throw IndexError("community labels must be >= 1, got " + std::to_string(l));
        remap.emplace(l, 0);
    }
    int next = 1;
    for (auto& [orig, compact] : remap) compact = next++;
    p.c_ = next - 1;
    p.membership_.reserve(labels.size());
    p.sizes_.assign(static_cast<std::size_t>(p.c_), 0);
    for (int l : labels) {
        const int r = remap[l];
        p.membership_.push_back(r);
        ++p.sizes_[r - 1];
    }
    return p;
}

std::vector<std::vector<int>> Partition::communities() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(c_));
    for (int i = 0; i < node_count(); ++i)
        out[membership_[i] - 1].push_back(i);
    return out;
}

MembershipMatrix partition_to_membership(const Partition& p) {
    const auto n = static_cast<std::size_t>(p.node_count());
    const auto c = static_cast<std::size_t>(p.community_count());
    Matrix s(n, c);
    for (std::size_t i = 0; i < n; ++i)
        s(i, static_cast<std::size_t>(p.label(static_cast<int>(i)) - 1)) = 1.0;
    return {std::move(s), MembershipKind::binary_indicator};
}

MembershipMatrix scale_membership(const MembershipMatrix& s) {
    const std::size_t n = s.entries.rows(), c = s.entries.cols();
    std::vector<double> colsum(c, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < c; ++r) colsum[r] += s.entries(i, r);
    for (std::size_t r = 0; r < c; ++r)
        if (colsum[r] == 0.0)
            throw EmptyCommunityError("community " + std::to_string(r + 1) + " is empty");
    Matrix h(n, c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < c; ++r)
            h(i, r) = s.entries(i, r) / std::sqrt(colsum[r]);
    return {std::move(h), MembershipKind::scaled_h};
}

}  // namespace modnmf
