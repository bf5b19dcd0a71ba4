#ifndef SIMBA_BNN_ENGINE_HPP
#define SIMBA_BNN_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "simba/binary_tensor.hpp"
#include "simba/peripherals.hpp"
#include "simba/simc_array.hpp"
#include "simba/topology.hpp"
#include "simba/weights.hpp"

namespace simba::bnn {

// Hook applied to a BinConv layer's pre-threshold match counts f(i,j) before
// binarization; used by the fault lab. `n_bits` is the window width (the
// clamping range of f).
using FaultHook =
    std::function<void(int layer_index, std::span<std::int32_t> f_values, int n_bits)>;

// Running tally of primitive operations a backend has executed.
struct OpTally {
    long long xor_ops = 0;
    long long or_ops = 0;
    long long and_ops = 0;
    long long popcount_ops = 0;
    long long popcount_blocks = 0;
    long long comparator_ops = 0;

    long long gate_ops() const { return xor_ops + or_ops + and_ops; }
};

// The primitive operations a BNN layer needs. OracleBackend computes them
// with plain integer arithmetic; SimcBackend routes every 2-bit gate through
// a bit-cell and every popcount through the SOT-MTJ bank protocol.
class ComputeBackend {
public:
    virtual ~ComputeBackend() = default;

    // Matches between two equal-length bit windows (XNOR popcount).
    virtual int match_count(std::span<const std::uint8_t> input,
                            std::span<const std::uint8_t> kernel) = 0;
    // popcount(input AND kernel).
    virtual int and_popcount(std::span<const std::uint8_t> input,
                             std::span<const std::uint8_t> kernel) = 0;
    virtual int or2(int a, int b) = 0;
    // Comparator decision: 1 iff count >= threshold.
    virtual int compare_threshold(int count, int threshold) = 0;

    virtual const char* name() const = 0;
    const OpTally& tally() const { return tally_; }

protected:
    OpTally tally_;
};

class OracleBackend final : public ComputeBackend {
public:
    explicit OracleBackend(int popcount_block_bits = 100);

    int match_count(std::span<const std::uint8_t> input,
                    std::span<const std::uint8_t> kernel) override;
    int and_popcount(std::span<const std::uint8_t> input,
                     std::span<const std::uint8_t> kernel) override;
    int or2(int a, int b) override;
    int compare_threshold(int count, int threshold) override;
    const char* name() const override { return "oracle"; }

private:
    int block_bits_;
};

class SimcBackend final : public ComputeBackend {
public:
    SimcBackend(const simc::ArrayConfig& array_cfg, const device::DeviceModel& model,
                const periph::PeripheralConfig& periph_cfg);

    int match_count(std::span<const std::uint8_t> input,
                    std::span<const std::uint8_t> kernel) override;
    int and_popcount(std::span<const std::uint8_t> input,
                     std::span<const std::uint8_t> kernel) override;
    int or2(int a, int b) override;
    int compare_threshold(int count, int threshold) override;
    const char* name() const override { return "simc"; }

    long long array_resets() const { return array_resets_; }
    const simc::SimcArray& array() const { return array_; }

private:
    int gate_op(int a, int b, simc::Gate gate);

    simc::SimcArray array_;
    periph::PeripheralConfig periph_cfg_;
    periph::BlockPopcounter popcounter_;
    std::vector<std::uint8_t> scratch_bits_;
    int cursor_ = 0;
    long long array_resets_ = 0;
};

// --- layer execution ---

BinaryTensor binconv_layer(const BinaryTensor& input, const LayerSpec& spec,
                           const LayerWeights& weights, ComputeBackend& backend,
                           int layer_index = 0, const FaultHook* hook = nullptr);

BinaryTensor maxpool_layer(const BinaryTensor& input, const LayerSpec& spec,
                           ComputeBackend& backend);

// Raw per-output popcount scores (before thresholding).
std::vector<std::int32_t> fullyconn_scores(const BinaryTensor& input, const LayerSpec& spec,
                                           const LayerWeights& weights, ComputeBackend& backend);

BinaryTensor fullyconn_layer(const BinaryTensor& input, const LayerSpec& spec,
                             const LayerWeights& weights, ComputeBackend& backend);

// --- inference ---

struct InferTrace {
    std::vector<BinaryTensor> layer_outputs;  // one per layer except the final scores
    std::vector<std::int32_t> final_scores;   // raw scores of the last FullyConn layer
    int predicted = 0;
};

// Runs the full network. The final FullyConn layer is not thresholded: the
// class is the argmax of its raw scores, lowest index breaking ties.
InferTrace infer(const BinaryTensor& image, const BnnTopology& topo, const WeightSet& weights,
                 ComputeBackend& backend, const FaultHook* hook = nullptr);

// --- static operation counts (perf model input) ---

struct LayerOpCounts {
    LayerKind kind = LayerKind::BinConv;
    long long xor_ops = 0;
    long long or_ops = 0;
    long long and_ops = 0;
    long long popcount_ops = 0;
    int popcount_bits_each = 0;
    long long popcount_blocks = 0;  // with the configured bank width
    long long comparator_ops = 0;

    long long gate_ops() const { return xor_ops + or_ops + and_ops; }
};

std::vector<LayerOpCounts> op_counts(const BnnTopology& topo, int popcount_block_bits);

}  // namespace simba::bnn

#endif  // SIMBA_BNN_ENGINE_HPP
