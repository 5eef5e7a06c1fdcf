#include <cmath>
#include <vector>

#include "doctest.h"
#include "modnmf/metrics.hpp"
#include "modnmf/rng.hpp"
#include "oracles.hpp"

using namespace modnmf;

TEST_SUITE_BEGIN("metrics");

namespace {

// relabel communities by a permutation of 1..c
Partition permute_labels(const Partition& p, const std::vector<int>& perm) {
    std::vector<int> labels(static_cast<std::size_t>(p.node_count()));
    for (int i = 0; i < p.node_count(); ++i)
        labels[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(p.label(i) - 1)];
    return Partition::from_labels(labels);
}

}  // namespace

TEST_CASE("confusion table counts") {
    const Partition truth = Partition::from_labels({1, 1, 2, 2, 2});
    const Partition inferred = Partition::from_labels({1, 2, 2, 2, 1});
    const ConfusionTable t = confusion_table(truth, inferred);
    REQUIRE(t.counts.size() == 2);
    REQUIRE(t.counts[0].size() == 2);
    CHECK(t.counts[0][0] == 1);
    CHECK(t.counts[0][1] == 1);
    CHECK(t.counts[1][0] == 1);
    CHECK(t.counts[1][1] == 2);
    CHECK(t.truth_sizes == std::vector<long long>{2, 3});
    CHECK(t.inferred_sizes == std::vector<long long>{2, 3});
    CHECK(t.total == 5);
    CHECK_THROWS_AS(confusion_table(truth, Partition::from_labels({1, 2})), ShapeError);
}

TEST_CASE("identical partitions score 1") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(30));
        const Partition p = oracle::random_partition(n, 1 + static_cast<int>(rng.below(5)), rng);
        CHECK(std::fabs(nmi(p, p) - 1.0) <= 1e-12);
    }
}

TEST_CASE("crossed two-by-two case scores 0") {
    // every cell count is 1 and every log term is log(4/(2*2)) = 0
    const Partition truth = Partition::from_labels({1, 1, 2, 2});
    const Partition inferred = Partition::from_labels({1, 2, 1, 2});
    CHECK(nmi(truth, inferred) == 0.0);
}

TEST_CASE("zero-entropy conventions") {
    const Partition split = Partition::from_labels({1, 1, 2, 2});
    const Partition lump = Partition::from_labels({1, 1, 1, 1});
    CHECK(nmi(split, lump) == 0.0);
    CHECK(nmi(lump, split) == 0.0);
    CHECK(nmi(lump, lump) == 1.0);
}

TEST_CASE("relabeling either argument changes nothing, bit for bit") {
    Rng rng(13);
    const std::vector<std::vector<int>> perms3{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 6 + static_cast<int>(rng.below(20));
        const Partition a = oracle::random_partition(n, 3, rng);
        const Partition b = oracle::random_partition(n, 3, rng);
        if (a.community_count() != 3 || b.community_count() != 3) continue;
        const double base = nmi(a, b);
        for (const auto& perm : perms3) {
            CHECK(nmi(permute_labels(a, perm), b) == base);
            CHECK(nmi(a, permute_labels(b, perm)) == base);
        }
    }
}

TEST_CASE("symmetry and range") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(25));
        const Partition a = oracle::random_partition(n, 1 + static_cast<int>(rng.below(4)), rng);
        const Partition b = oracle::random_partition(n, 1 + static_cast<int>(rng.below(4)), rng);
        const double v = nmi(a, b);
        CHECK(std::fabs(v - nmi(b, a)) <= 1e-12);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0 + 1e-12);
    }
}

TEST_CASE("correlation on exact lines") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(2.0 * x + 3.0);
    CHECK(pearson(xs, ys) == doctest::Approx(1.0).epsilon(1e-14));
    for (auto& y : ys) y = -y;
    CHECK(pearson(xs, ys) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("correlation hand value") {
    CHECK(pearson({1.0, 2.0, 3.0}, {1.0, 3.0, 2.0}) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("correlation rejections") {
    CHECK_THROWS_AS(pearson({1.0, 2.0}, {1.0}), ShapeError);
    CHECK_THROWS_AS(pearson({1.0}, {1.0}), DegenerateSeriesError);
    CHECK_THROWS_AS(pearson({}, {}), DegenerateSeriesError);
    CHECK_THROWS_AS(pearson({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), DegenerateSeriesError);
    CHECK_THROWS_AS(pearson({1.0, 2.0, 3.0}, {5.0, 5.0, 5.0}), DegenerateSeriesError);
}

TEST_SUITE_END();
