#ifndef SIMBA_WEIGHTS_HPP
#define SIMBA_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "simba/topology.hpp"

namespace simba::bnn {

// Trained parameters for one BinConv/FullyConn layer. Kernel bits are kept
// unpacked (one byte per bit) for fast window matching; kernel o occupies
// [o*window_bits, (o+1)*window_bits). Bit order within a BinConv kernel is
// (ky, kx, input-channel), matching the window gather order.
struct LayerWeights {
    std::vector<std::uint8_t> kernel_bits;
    std::vector<std::int32_t> thresholds;  // one per output channel
};

// Weights for every parameterized layer of a topology, in layer order
// (Maxpool layers carry no entry).
struct WeightSet {
    std::vector<LayerWeights> layers;

    // Entry for topology layer `layer_index`; throws if that layer carries
    // no parameters.
    const LayerWeights& for_layer(const BnnTopology& topo, std::size_t layer_index) const;

    void validate(const BnnTopology& topo) const;
};

// SMBW container: "SMBW" magic, u32 little-endian version (1), then per
// parameterized layer: OF kernels of ceil(window_bits/8) bytes each
// (bits packed LSB-first), followed by OF int32 little-endian thresholds.
WeightSet load_smbw(const std::string& path, const BnnTopology& topo);
void save_smbw(const std::string& path, const BnnTopology& topo, const WeightSet& weights);

}  // namespace simba::bnn

#endif  // SIMBA_WEIGHTS_HPP
