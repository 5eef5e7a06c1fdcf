#include <cmath>

#include "doctest.h"
#include "modnmf/fast_greedy.hpp"
#include "modnmf/generators.hpp"
#include "modnmf/metrics.hpp"
#include "modnmf/objectives.hpp"
#include "modnmf/rng.hpp"
#include "oracles.hpp"

using namespace modnmf;

TEST_SUITE_BEGIN("fast_greedy");

TEST_CASE("two triangles split cleanly") {
    const Partition p = fast_greedy(oracle::two_triangles());
    CHECK(std::fabs(nmi(p, oracle::triangle_split()) - 1.0) <= 1e-12);
    CHECK(modularity_q(oracle::two_triangles(), p) == 0.5);
}

TEST_CASE("single edge stays merged") {
    // merging the two endpoints moves the score from -1/2 to 0
    const Graph g = Graph::from_edge_list({{0, 1}}, 2);
    const Partition p = fast_greedy(g);
    CHECK(p.community_count() == 1);
    CHECK(modularity_q(g, p) == 0.0);
}

TEST_CASE("empty graph is rejected") {
    CHECK_THROWS_AS(fast_greedy(Graph::from_edge_list({}, 3)), EmptyGraphError);
}

TEST_CASE("never beats the exhaustive optimum") {
    Rng rng(61);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = oracle::random_graph(5 + static_cast<int>(rng.below(3)), 0.4,
                                             rng.next_u64());
        const double greedy_q = modularity_q(g, fast_greedy(g));
        const double best_q = oracle::max_q_bruteforce(g);
        CHECK(greedy_q <= best_q + 1e-12);
    }
    // and it attains the optimum on the separable case (oracle sums pairwise,
    // so allow float noise)
    CHECK(std::fabs(modularity_q(oracle::two_triangles(), fast_greedy(oracle::two_triangles())) -
                    oracle::max_q_bruteforce(oracle::two_triangles())) <= 1e-12);
}

TEST_CASE("deterministic across calls") {
    const auto [g, planted] = sample_gn(4.0, 17);
    const Partition a = fast_greedy(g);
    const Partition b = fast_greedy(g);
    CHECK(a == b);
    CHECK(a.membership() == b.membership());
}

TEST_SUITE_END();
