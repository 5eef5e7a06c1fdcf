#include "modnmf/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace modnmf {

namespace {

// Sum in ascending value order: float addition is order-sensitive, and the
// term order must not leak the (arbitrary) community numbering, or
// relabeling-invariance would only hold approximately.
double canonical_sum(std::vector<double>&& terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
}

}  // namespace

ConfusionTable confusion_table(const Partition& truth, const Partition& inferred) {
    if (truth.node_count() != inferred.node_count())
        throw ShapeError("partitions disagree on node count");
    const auto ct = static_cast<std::size_t>(truth.community_count());
    const auto ci = static_cast<std::size_t>(inferred.community_count());
    ConfusionTable t;
    t.counts.assign(ct, std::vector<long long>(ci, 0));
    t.truth_sizes.assign(ct, 0);
    t.inferred_sizes.assign(ci, 0);
    t.total = truth.node_count();
    for (int i = 0; i < truth.node_count(); ++i) {
        const auto a = static_cast<std::size_t>(truth.label(i) - 1);
        const auto b = static_cast<std::size_t>(inferred.label(i) - 1);
        ++t.counts[a][b];
        ++t.truth_sizes[a];
        ++t.inferred_sizes[b];
    }
    return t;
}

double nmi(const Partition& truth, const Partition& inferred) {
    const ConfusionTable t = confusion_table(truth, inferred);
    const double n = static_cast<double>(t.total);

    std::vector<double> truth_terms, inferred_terms;  // n_i log(n_i/n), each <= 0
    for (long long ni : t.truth_sizes)
        truth_terms.push_back(static_cast<double>(ni) * std::log(static_cast<double>(ni) / n));
    for (long long nj : t.inferred_sizes)
        inferred_terms.push_back(static_cast<double>(nj) * std::log(static_cast<double>(nj) / n));
    const double h_truth = canonical_sum(std::move(truth_terms));
    const double h_inferred = canonical_sum(std::move(inferred_terms));

    // both all-in-one: identical trivial partitions
    if (h_truth == 0.0 && h_inferred == 0.0) return 1.0;
    // exactly one marginal entropy zero: no information shared
    if (h_truth == 0.0 || h_inferred == 0.0) return 0.0;

    std::vector<double> joint_terms;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            const long long nij = t.counts[i][j];
            if (nij == 0) continue;
            joint_terms.push_back(static_cast<double>(nij) *
                                  std::log(static_cast<double>(nij) * n /
                                           (static_cast<double>(t.truth_sizes[i]) *
                                            static_cast<double>(t.inferred_sizes[j]))));
        }
    }
    return -2.0 * canonical_sum(std::move(joint_terms)) / (h_truth + h_inferred);
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw ShapeError("series lengths differ");
    if (xs.size() < 2) throw DegenerateSeriesError("correlation needs at least 2 points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw DegenerateSeriesError("zero variance series");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace modnmf
