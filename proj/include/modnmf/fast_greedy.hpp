#pragma once

#include "modnmf/graph.hpp"

namespace modnmf {

// Agglomerative baseline: start from singletons, repeatedly merge the
// connected community pair with the largest modularity gain
// ΔQ = 2(e_rs − a_r a_s), stop when no merge has positive gain. Ties break on
// the lowest (r, s) pair, the surviving community keeps the lower id, so the
// whole procedure is deterministic.
Partition fast_greedy(const Graph& g);

}  // namespace modnmf
