#include "simba/bnn_engine.hpp"

#include <algorithm>

namespace simba::bnn {

// --- OracleBackend ---

OracleBackend::OracleBackend(int popcount_block_bits) : block_bits_(popcount_block_bits) {
    if (popcount_block_bits <= 0)
        throw ConfigError("OracleBackend: popcount_block_bits must be > 0");
}

int OracleBackend::match_count(std::span<const std::uint8_t> input,
                               std::span<const std::uint8_t> kernel) {
    if (input.size() != kernel.size())
        throw ShapeMismatch("match_count: window and kernel widths differ");
    int matches = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        matches += (input[i] == kernel[i]);
    }
    tally_.xor_ops += static_cast<long long>(input.size());
    tally_.popcount_ops += 1;
    tally_.popcount_blocks +=
        (static_cast<long long>(input.size()) + block_bits_ - 1) / block_bits_;
    return matches;
}

int OracleBackend::and_popcount(std::span<const std::uint8_t> input,
                                std::span<const std::uint8_t> kernel) {
    if (input.size() != kernel.size())
        throw ShapeMismatch("and_popcount: input and kernel widths differ");
    int ones = 0;
    for (std::size_t i = 0; i < input.size(); ++i) ones += (input[i] & kernel[i]);
    tally_.and_ops += static_cast<long long>(input.size());
    tally_.popcount_ops += 1;
    tally_.popcount_blocks +=
        (static_cast<long long>(input.size()) + block_bits_ - 1) / block_bits_;
    return ones;
}

int OracleBackend::or2(int a, int b) {
    tally_.or_ops += 1;
    return (a | b) ? 1 : 0;
}

int OracleBackend::compare_threshold(int count, int threshold) {
    tally_.comparator_ops += 1;
    return count >= threshold ? 1 : 0;
}

// --- SimcBackend ---

SimcBackend::SimcBackend(const simc::ArrayConfig& array_cfg, const device::DeviceModel& model,
                         const periph::PeripheralConfig& periph_cfg)
    : array_(array_cfg, model), periph_cfg_(periph_cfg), popcounter_(periph_cfg) {}

int SimcBackend::gate_op(int a, int b, simc::Gate gate) {
    if (cursor_ == array_.config().cells()) {
        array_.reset();
        cursor_ = 0;
        ++array_resets_;
    }
    const int row = cursor_ / array_.config().cols;
    const int col = cursor_ % array_.config().cols;
    ++cursor_;
    array_.write_bit(row, col, simc::Region::A, a);
    array_.write_bit(row, col, simc::Region::B, b);
    const simc::ComputeResult res = array_.compute(row, col, gate);
    return array_.read(row, col, res.output);
}

int SimcBackend::match_count(std::span<const std::uint8_t> input,
                             std::span<const std::uint8_t> kernel) {
    if (input.size() != kernel.size())
        throw ShapeMismatch("match_count: window and kernel widths differ");
    scratch_bits_.resize(input.size());
    for (std::size_t i = 0; i < input.size(); ++i)
        scratch_bits_[i] = static_cast<std::uint8_t>(gate_op(input[i], kernel[i], simc::Gate::Xor));
    tally_.xor_ops += static_cast<long long>(input.size());

    const long long before = popcounter_.blocks_used();
    const long long mismatches = popcounter_.count_ones(scratch_bits_);
    tally_.popcount_ops += 1;
    tally_.popcount_blocks += popcounter_.blocks_used() - before;
    return static_cast<int>(static_cast<long long>(input.size()) - mismatches);
}

int SimcBackend::and_popcount(std::span<const std::uint8_t> input,
                              std::span<const std::uint8_t> kernel) {
    if (input.size() != kernel.size())
        throw ShapeMismatch("and_popcount: input and kernel widths differ");
    scratch_bits_.resize(input.size());
    for (std::size_t i = 0; i < input.size(); ++i)
        scratch_bits_[i] = static_cast<std::uint8_t>(gate_op(input[i], kernel[i], simc::Gate::And));
    tally_.and_ops += static_cast<long long>(input.size());

    const long long before = popcounter_.blocks_used();
    const long long ones = popcounter_.count_ones(scratch_bits_);
    tally_.popcount_ops += 1;
    tally_.popcount_blocks += popcounter_.blocks_used() - before;
    return static_cast<int>(ones);
}

int SimcBackend::or2(int a, int b) {
    tally_.or_ops += 1;
    return gate_op(a, b, simc::Gate::Or);
}

int SimcBackend::compare_threshold(int count, int threshold) {
    tally_.comparator_ops += 1;
    periph::ComparatorCell comp;
    // The count of low-resistance bank elements drives I_comp; model the
    // trip as the count comparison it implements.
    if (count >= threshold) comp.state = 0;
    return comp.state == 0 ? 1 : 0;
}

// --- layers ---

namespace {

void gather_window(const BinaryTensor& in, int ox, int oy, int kw, int kh,
                   std::vector<std::uint8_t>& out) {
    const int pad_x = (kw - 1) / 2;
    const int pad_y = (kh - 1) / 2;
    const int c = in.channels();
    std::size_t idx = 0;
    for (int ky = 0; ky < kh; ++ky)
        for (int kx = 0; kx < kw; ++kx)
            for (int ch = 0; ch < c; ++ch)
                out[idx++] =
                    static_cast<std::uint8_t>(in.get_padded(ox + kx - pad_x, oy + ky - pad_y, ch));
}

}  // namespace

BinaryTensor binconv_layer(const BinaryTensor& input, const LayerSpec& spec,
                           const LayerWeights& weights, ComputeBackend& backend, int layer_index,
                           const FaultHook* hook) {
    if (spec.kind != LayerKind::BinConv) throw ShapeMismatch("binconv_layer: wrong layer kind");
    if (input.width() != spec.w || input.height() != spec.h ||
        input.channels() != spec.in_features)
        throw ShapeMismatch("binconv_layer: input shape mismatch");
    const int wb = spec.window_bits();
    if (weights.kernel_bits.size() != static_cast<std::size_t>(spec.out_features) * wb ||
        weights.thresholds.size() != static_cast<std::size_t>(spec.out_features))
        throw ShapeMismatch("binconv_layer: weight shape mismatch");

    // f(i,j) per output channel, channel-major: index = (o*H + y)*W + x.
    std::vector<std::int32_t> f_values(
        static_cast<std::size_t>(spec.out_features) * spec.h * spec.w);
    std::vector<std::uint8_t> window(static_cast<std::size_t>(wb));
    for (int o = 0; o < spec.out_features; ++o) {
        const std::span<const std::uint8_t> kernel(
            weights.kernel_bits.data() + static_cast<std::size_t>(o) * wb,
            static_cast<std::size_t>(wb));
        for (int y = 0; y < spec.h; ++y)
            for (int x = 0; x < spec.w; ++x) {
                gather_window(input, x, y, spec.kw, spec.kh, window);
                f_values[(static_cast<std::size_t>(o) * spec.h + y) * spec.w + x] =
                    backend.match_count(window, kernel);
            }
    }

    if (hook && *hook) (*hook)(layer_index, f_values, wb);

    BinaryTensor out(spec.w, spec.h, spec.out_features);
    for (int o = 0; o < spec.out_features; ++o)
        for (int y = 0; y < spec.h; ++y)
            for (int x = 0; x < spec.w; ++x) {
                const std::int32_t f =
                    f_values[(static_cast<std::size_t>(o) * spec.h + y) * spec.w + x];
                out.set(x, y, o, backend.compare_threshold(f, weights.thresholds[o]));
            }
    return out;
}

BinaryTensor maxpool_layer(const BinaryTensor& input, const LayerSpec& spec,
                           ComputeBackend& backend) {
    if (spec.kind != LayerKind::Maxpool) throw ShapeMismatch("maxpool_layer: wrong layer kind");
    if (input.width() % 2 != 0 || input.height() % 2 != 0)
        throw OddDimensions("maxpool_layer: input dimensions must be even");
    if (input.width() / 2 != spec.w || input.height() / 2 != spec.h ||
        input.channels() != spec.in_features)
        throw ShapeMismatch("maxpool_layer: input shape mismatch");

    BinaryTensor out(spec.w, spec.h, spec.out_features);
    for (int c = 0; c < spec.out_features; ++c)
        for (int y = 0; y < spec.h; ++y)
            for (int x = 0; x < spec.w; ++x) {
                // Three cascaded 2-input ORs per output pixel.
                const int top = backend.or2(input.get(2 * x, 2 * y, c), input.get(2 * x + 1, 2 * y, c));
                const int bot =
                    backend.or2(input.get(2 * x, 2 * y + 1, c), input.get(2 * x + 1, 2 * y + 1, c));
                out.set(x, y, c, backend.or2(top, bot));
            }
    return out;
}

std::vector<std::int32_t> fullyconn_scores(const BinaryTensor& input, const LayerSpec& spec,
                                           const LayerWeights& weights, ComputeBackend& backend) {
    if (spec.kind != LayerKind::FullyConn)
        throw ShapeMismatch("fullyconn_scores: wrong layer kind");
    if (static_cast<int>(input.bit_count()) != spec.in_features)
        throw ShapeMismatch("fullyconn_scores: input width " +
                            std::to_string(input.bit_count()) + " != IF " +
                            std::to_string(spec.in_features));
    if (weights.kernel_bits.size() !=
        static_cast<std::size_t>(spec.out_features) * spec.in_features)
        throw ShapeMismatch("fullyconn_scores: weight shape mismatch");

    std::vector<std::uint8_t> flat(input.bit_count());
    for (std::size_t i = 0; i < flat.size(); ++i)
        flat[i] = static_cast<std::uint8_t>(input.get_flat(i));

    std::vector<std::int32_t> scores(static_cast<std::size_t>(spec.out_features));
    for (int o = 0; o < spec.out_features; ++o) {
        const std::span<const std::uint8_t> kernel(
            weights.kernel_bits.data() + static_cast<std::size_t>(o) * spec.in_features,
            static_cast<std::size_t>(spec.in_features));
        scores[static_cast<std::size_t>(o)] = backend.and_popcount(flat, kernel);
    }
    return scores;
}

BinaryTensor fullyconn_layer(const BinaryTensor& input, const LayerSpec& spec,
                             const LayerWeights& weights, ComputeBackend& backend) {
    const std::vector<std::int32_t> scores = fullyconn_scores(input, spec, weights, backend);
    if (weights.thresholds.size() != scores.size())
        throw ShapeMismatch("fullyconn_layer: threshold count mismatch");
    BinaryTensor out(1, 1, spec.out_features);
    for (int o = 0; o < spec.out_features; ++o)
        out.set(0, 0, o, backend.compare_threshold(scores[static_cast<std::size_t>(o)],
                                                   weights.thresholds[static_cast<std::size_t>(o)]));
    return out;
}

InferTrace infer(const BinaryTensor& image, const BnnTopology& topo, const WeightSet& weights,
                 ComputeBackend& backend, const FaultHook* hook) {
    topo.validate();
    weights.validate(topo);
    if (topo.layers().back().kind != LayerKind::FullyConn)
        throw ShapeMismatch("infer: final layer must be fullyconn");
    if (image.width() != topo.input().w || image.height() != topo.input().h ||
        image.channels() != topo.input().c)
        throw ShapeMismatch("infer: image shape does not match topology input");

    InferTrace trace;
    BinaryTensor current = image;
    for (std::size_t i = 0; i < topo.layer_count(); ++i) {
        const LayerSpec& spec = topo.layers()[i];
        const bool last = (i + 1 == topo.layer_count());
        switch (spec.kind) {
            case LayerKind::BinConv:
                current = binconv_layer(current, spec, weights.for_layer(topo, i), backend,
                                        static_cast<int>(i), hook);
                trace.layer_outputs.push_back(current);
                break;
            case LayerKind::Maxpool:
                current = maxpool_layer(current, spec, backend);
                trace.layer_outputs.push_back(current);
                break;
            case LayerKind::FullyConn:
                if (last) {
                    // Raw scores keep the class ordering; thresholding the
                    // final layer would destroy it.
                    trace.final_scores =
                        fullyconn_scores(current, spec, weights.for_layer(topo, i), backend);
                } else {
                    current = fullyconn_layer(current, spec, weights.for_layer(topo, i), backend);
                    trace.layer_outputs.push_back(current);
                }
                break;
        }
    }

    int best = 0;
    for (std::size_t o = 1; o < trace.final_scores.size(); ++o)
        if (trace.final_scores[o] > trace.final_scores[static_cast<std::size_t>(best)])
            best = static_cast<int>(o);
    trace.predicted = best;
    return trace;
}

std::vector<LayerOpCounts> op_counts(const BnnTopology& topo, int popcount_block_bits) {
    if (popcount_block_bits <= 0)
        throw ConfigError("op_counts: popcount_block_bits must be > 0");
    topo.validate();
    std::vector<LayerOpCounts> counts;
    for (const LayerSpec& l : topo.layers()) {
        LayerOpCounts c;
        c.kind = l.kind;
        const long long wh = static_cast<long long>(l.w) * l.h;
        switch (l.kind) {
            case LayerKind::BinConv:
                c.xor_ops = static_cast<long long>(l.kw) * l.kh * l.out_features * wh *
                            l.in_features;
                c.popcount_ops = wh * l.out_features;
                c.popcount_bits_each = l.window_bits();
                c.comparator_ops = wh * l.out_features;
                break;
            case LayerKind::Maxpool:
                c.or_ops = 3 * wh * l.out_features;
                break;
            case LayerKind::FullyConn:
                c.and_ops = static_cast<long long>(l.in_features) * l.out_features;
                c.popcount_ops = l.out_features;
                c.popcount_bits_each = l.in_features;
                c.comparator_ops = l.out_features;
                break;
        }
        if (c.popcount_ops > 0)
            c.popcount_blocks = c.popcount_ops *
                                ((c.popcount_bits_each + popcount_block_bits - 1) /
                                 popcount_block_bits);
        counts.push_back(c);
    }
    return counts;
}

}  // namespace simba::bnn
