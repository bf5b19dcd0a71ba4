#ifndef SIMBA_PRESETS_HPP
#define SIMBA_PRESETS_HPP

#include <cstdint>

#include "simba/topology.hpp"
#include "simba/weights.hpp"

namespace simba::bnn {

// Desk-scale two-class detector weights for the fault-robustness fixture
// (expects the topology from config/topology_desk.json: binconv 3x3 OF=2,
// maxpool, fullyconn OF=2 over 16x16x2). Channel 0 detects dark windows
// (all-zeros kernel), channel 1 bright windows (all-ones kernel), both
// thresholded at 19 of 27; the head counts each detector over the interior
// 14x14 pooled positions.
WeightSet make_desk_weights(const BnnTopology& topo);

// Uniformly random kernels with mid-window thresholds; handy for demos and
// equivalence tests on arbitrary topologies.
WeightSet make_random_weights(const BnnTopology& topo, std::uint64_t seed);

}  // namespace simba::bnn

#endif  // SIMBA_PRESETS_HPP
