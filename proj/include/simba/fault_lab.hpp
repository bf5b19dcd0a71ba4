#ifndef SIMBA_FAULT_LAB_HPP
#define SIMBA_FAULT_LAB_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "simba/bnn_engine.hpp"
#include "simba/dataset.hpp"
#include "simba/rng.hpp"
#include "simba/topology.hpp"
#include "simba/weights.hpp"

namespace simba::fault {

// Error-injection recipe for the pre-threshold match counts f(i,j) of the
// targeted BinConv layers.
struct FaultSpec {
    double pixel_error_rate = 0.01;      // fraction of f values perturbed, (0, 1]
    int magnitude = 30;                  // each draw is uniform over +/-1..+/-magnitude
    std::vector<int> target_layers;      // BinConv layer indices; empty = all BinConv
    std::uint64_t seed = 1;

    void validate() const;
    bool targets(int layer_index, const bnn::BnnTopology& topo) const;
};

// Perturbs exactly round(rate * f_values.size()) positions. Each perturbed
// value receives a uniform draw from {-m..-1, +1..+m} and is clamped to
// [0, n_bits]. Positions are sampled without replacement from `rng`.
void inject(std::span<std::int32_t> f_values, int n_bits, double rate, int magnitude,
            SplitMix64& rng);

// Number of positions inject() perturbs for a given rate and count.
long long injection_count(double rate, std::size_t count);

// Fault hook wired into bnn::infer: injects into each targeted BinConv
// layer, deriving an independent stream per (seed, image, layer).
bnn::FaultHook make_fault_hook(const FaultSpec& spec, const bnn::BnnTopology& topo,
                               std::uint64_t image_tag);

struct RatePoint {
    double rate = 0.0;
    double mean_error = 0.0;
    double stddev = 0.0;
    int trials = 0;
};

struct AccuracyReport {
    double baseline_error = 0.0;
    std::vector<RatePoint> points;
    int trials_per_rate = 0;
};

// Runs `trials` seeded inference passes over the dataset for each rate and
// reports the mean classification error, plus the clean baseline. Streams
// derive from (seed, rate index, trial, image, layer) so results do not
// depend on evaluation order.
AccuracyReport accuracy_sweep(const Dataset& dataset, const bnn::BnnTopology& topo,
                              const bnn::WeightSet& weights, const std::vector<double>& rates,
                              const FaultSpec& spec_template, int trials);

}  // namespace simba::fault

#endif  // SIMBA_FAULT_LAB_HPP
