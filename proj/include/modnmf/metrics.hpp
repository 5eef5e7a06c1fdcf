#pragma once

#include <vector>

#include "modnmf/graph.hpp"

namespace modnmf {

// Cross-tabulation of two partitions over the same node set.
struct ConfusionTable {
    std::vector<std::vector<long long>> counts;  // truth community × inferred community
    std::vector<long long> truth_sizes;
    std::vector<long long> inferred_sizes;
    long long total = 0;
};

ConfusionTable confusion_table(const Partition& truth, const Partition& inferred);

// Normalized mutual information in [0,1], natural log (base cancels).
// Conventions: zero-count cells contribute 0; if both partitions are
// all-in-one the result is 1; if exactly one marginal entropy is zero the
// result is 0.
double nmi(const Partition& truth, const Partition& inferred);

// Sample Pearson correlation of two equal-length series.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace modnmf
