#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modnmf/errors.hpp"
#include "modnmf/matrix.hpp"

namespace modnmf {

// Simple undirected graph, 0-based node ids, no self-loops, no multi-edges.
// Adjacency is kept as sorted neighbor lists; solvers ask for an explicit
// dense materialization when they need matrix products.
class Graph {
  public:
    // edges: each undirected edge listed once as (u, v)
    static Graph from_edge_list(const std::vector<std::pair<int, int>>& edges, int n);

    int node_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }            // m
    long long total_degree() const { return 2 * m_; }      // 2m

    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    int max_degree() const;
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    bool has_edge(int u, int v) const;

    // every undirected edge once, (u, v) with u < v, lexicographic order
    std::vector<std::pair<int, int>> edges() const;

    Matrix dense_adjacency() const;

  private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

// Node → community assignment with 1-based community labels 1..c, every
// label used at least once.
class Partition {
  public:
    Partition() = default;

    // labels are arbitrary positive ints; they are compacted to 1..c
    // preserving numeric order (contiguous input labels pass through as-is).
    static Partition from_labels(const std::vector<int>& labels);

    int node_count() const { return static_cast<int>(membership_.size()); }
    int community_count() const { return c_; }
    int label(int i) const { return membership_[i]; }
    const std::vector<int>& membership() const { return membership_; }

    // size of community r, r in 1..c
    int community_size(int r) const { return sizes_[r - 1]; }
    const std::vector<int>& sizes() const { return sizes_; }

    // member node ids of community r in ascending order
    std::vector<std::vector<int>> communities() const;

    bool operator==(const Partition& o) const { return membership_ == o.membership_; }

  private:
    std::vector<int> membership_;
    std::vector<int> sizes_;
    int c_ = 0;
};

enum class MembershipKind { binary_indicator, continuous_iterate, scaled_h };

// n×c nonnegative membership weights; `kind` records which regime the
// entries live in (exact indicator, solver iterate, or column-normalized H).
struct MembershipMatrix {
    Matrix entries;
    MembershipKind kind = MembershipKind::continuous_iterate;
};

// binary indicator S with S_ir = 1 iff node i is in community r
MembershipMatrix partition_to_membership(const Partition& p);

// H with columns h_r = s_r / sqrt(n_r), so HᵀH = I
MembershipMatrix scale_membership(const MembershipMatrix& s);

}  // namespace modnmf
