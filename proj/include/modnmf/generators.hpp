#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modnmf/graph.hpp"
#include "modnmf/matrix.hpp"

namespace modnmf {

// Block model: fixed community sizes, symmetric edge-probability matrix.
struct SbmParams {
    std::vector<int> sizes;
    Matrix theta;  // c×c, entries in [0,1], symmetric
};

// Four communities of 32 (n=128), expected degree 16 split between z_in
// within-community and z_out cross-community stubs: theta_rr = (16-z_out)/32,
// theta_rs = z_out/96.
struct GnParams {
    double z_out = 0.0;
    SbmParams to_sbm() const;
};

// Simplified power-law benchmark: degree exponent 2 on [kmin, maxk] with kmin
// solved so the mean is k; community-size exponent 1 on [minc, maxc].
struct LfrParams {
    int n = 0;
    double mu = 0.0;
    double k = 0.0;
    int maxk = 0;
    int minc = 0;
    int maxc = 0;
};

// All samplers are deterministic functions of (params, seed): same inputs,
// byte-identical (Graph, Partition) output on any platform.
std::pair<Graph, Partition> sample_sbm(const SbmParams& params, std::uint64_t seed);
std::pair<Graph, Partition> sample_gn(double z_out, std::uint64_t seed);
std::pair<Graph, Partition> sample_lfr(const LfrParams& params, std::uint64_t seed);

}  // namespace modnmf
