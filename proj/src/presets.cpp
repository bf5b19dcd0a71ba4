#include "simba/presets.hpp"

#include "simba/rng.hpp"

namespace simba::bnn {

WeightSet make_desk_weights(const BnnTopology& topo) {
    topo.validate();
    const auto& layers = topo.layers();
    if (layers.size() != 3 || layers[0].kind != LayerKind::BinConv ||
        layers[0].out_features != 2 || layers[0].kw != 3 || layers[0].kh != 3 ||
        layers[1].kind != LayerKind::Maxpool || layers[2].kind != LayerKind::FullyConn ||
        layers[2].out_features != 2)
        throw ConfigError("desk preset: topology must be binconv(3x3, OF=2), maxpool, fullyconn(OF=2)");

    WeightSet ws;

    // Conv: kernel 0 all zeros (dark detector), kernel 1 all ones.
    LayerWeights conv;
    const int wb = layers[0].window_bits();
    conv.kernel_bits.assign(static_cast<std::size_t>(2) * wb, 0);
    for (int b = 0; b < wb; ++b) conv.kernel_bits[static_cast<std::size_t>(wb) + b] = 1;
    conv.thresholds = {19, 19};
    ws.layers.push_back(std::move(conv));

    // Head: count each detector channel over the interior pooled positions.
    const LayerSpec& fc = layers[2];
    const int pw = layers[1].w, ph = layers[1].h, pc = layers[1].out_features;
    LayerWeights head;
    head.kernel_bits.assign(static_cast<std::size_t>(2) * fc.in_features, 0);
    for (int y = 1; y < ph - 1; ++y)
        for (int x = 1; x < pw - 1; ++x)
            for (int c = 0; c < pc; ++c) {
                const std::size_t bit = (static_cast<std::size_t>(y) * pw + x) * pc + c;
                head.kernel_bits[static_cast<std::size_t>(c) * fc.in_features + bit] = 1;
            }
    head.thresholds = {0, 0};  // final layer classifies by raw score argmax
    ws.layers.push_back(std::move(head));

    ws.validate(topo);
    return ws;
}

WeightSet make_random_weights(const BnnTopology& topo, std::uint64_t seed) {
    topo.validate();
    WeightSet ws;
    std::uint64_t layer_tag = 0;
    for (std::size_t i = 0; i < topo.layers().size(); ++i) {
        const LayerSpec& spec = topo.layers()[i];
        if (spec.kind == LayerKind::Maxpool) continue;
        SplitMix64 rng = derive_stream(seed, {layer_tag++});
        LayerWeights lw;
        const int wb = spec.window_bits();
        lw.kernel_bits.resize(static_cast<std::size_t>(spec.out_features) * wb);
        for (auto& bit : lw.kernel_bits) bit = static_cast<std::uint8_t>(rng.below(2));
        lw.thresholds.assign(static_cast<std::size_t>(spec.out_features),
                             static_cast<std::int32_t>(wb / 2));
        ws.layers.push_back(std::move(lw));
    }
    ws.validate(topo);
    return ws;
}

}  // namespace simba::bnn
