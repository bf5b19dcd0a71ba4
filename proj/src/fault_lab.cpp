#include "simba/fault_lab.hpp"

#include <algorithm>
#include <cmath>

namespace simba::fault {

void FaultSpec::validate() const {
    if (!(pixel_error_rate > 0.0 && pixel_error_rate <= 1.0))
        throw ConfigError("fault spec: pixel_error_rate must be in (0, 1]");
    if (magnitude < 1) throw ConfigError("fault spec: magnitude must be >= 1");
}

bool FaultSpec::targets(int layer_index, const bnn::BnnTopology& topo) const {
    if (topo.layers().at(static_cast<std::size_t>(layer_index)).kind != bnn::LayerKind::BinConv)
        return false;
    if (target_layers.empty()) return true;
    return std::find(target_layers.begin(), target_layers.end(), layer_index) !=
           target_layers.end();
}

long long injection_count(double rate, std::size_t count) {
    return std::llround(rate * static_cast<double>(count));
}

void inject(std::span<std::int32_t> f_values, int n_bits, double rate, int magnitude,
            SplitMix64& rng) {
    const long long n_perturb = injection_count(rate, f_values.size());
    if (n_perturb <= 0) return;

    // Partial Fisher-Yates: the first n_perturb slots end up holding a
    // uniform sample without replacement.
    std::vector<std::uint32_t> indices(f_values.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<std::uint32_t>(i);
    for (long long i = 0; i < n_perturb; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(rng.below(indices.size() - static_cast<std::size_t>(i)));
        std::swap(indices[static_cast<std::size_t>(i)], indices[j]);
    }

    for (long long i = 0; i < n_perturb; ++i) {
        // Uniform over {-m..-1, +1..+m}.
        const std::uint64_t draw = rng.below(2ULL * static_cast<std::uint64_t>(magnitude));
        const std::int32_t delta =
            draw < static_cast<std::uint64_t>(magnitude)
                ? -static_cast<std::int32_t>(draw + 1)
                : static_cast<std::int32_t>(draw - static_cast<std::uint64_t>(magnitude) + 1);
        std::int32_t& f = f_values[indices[static_cast<std::size_t>(i)]];
        f = std::clamp(f + delta, 0, n_bits);
    }
}

bnn::FaultHook make_fault_hook(const FaultSpec& spec, const bnn::BnnTopology& topo,
                               std::uint64_t image_tag) {
    spec.validate();
    return [spec, &topo, image_tag](int layer_index, std::span<std::int32_t> f_values,
                                    int n_bits) {
        if (!spec.targets(layer_index, topo)) return;
        SplitMix64 rng =
            derive_stream(spec.seed, {image_tag, static_cast<std::uint64_t>(layer_index)});
        inject(f_values, n_bits, spec.pixel_error_rate, spec.magnitude, rng);
    };
}

AccuracyReport accuracy_sweep(const Dataset& dataset, const bnn::BnnTopology& topo,
                              const bnn::WeightSet& weights, const std::vector<double>& rates,
                              const FaultSpec& spec_template, int trials) {
    if (dataset.images.empty()) throw ConfigError("accuracy_sweep: empty dataset");
    if (trials <= 0) throw ConfigError("accuracy_sweep: trials must be >= 1");

    AccuracyReport report;
    report.trials_per_rate = trials;

    // Clean baseline, evaluated once.
    {
        long long wrong = 0;
        for (const bnn::LabeledImage& img : dataset.images) {
            bnn::OracleBackend backend;
            if (bnn::infer(img.pixels, topo, weights, backend).predicted != img.label) ++wrong;
        }
        report.baseline_error = static_cast<double>(wrong) / dataset.images.size();
    }

    for (std::size_t r = 0; r < rates.size(); ++r) {
        FaultSpec spec = spec_template;
        spec.pixel_error_rate = rates[r];
        spec.validate();

        std::vector<double> errors(static_cast<std::size_t>(trials));
        for (int t = 0; t < trials; ++t) {
            long long wrong = 0;
            for (std::size_t i = 0; i < dataset.images.size(); ++i) {
                // One derived stream per (rate, trial, image, layer).
                FaultSpec per_trial = spec;
                per_trial.seed = derive_stream(spec.seed, {static_cast<std::uint64_t>(r),
                                                           static_cast<std::uint64_t>(t)})
                                     .next();
                const bnn::FaultHook hook =
                    make_fault_hook(per_trial, topo, static_cast<std::uint64_t>(i));
                bnn::OracleBackend backend;
                if (bnn::infer(dataset.images[i].pixels, topo, weights, backend, &hook)
                        .predicted != dataset.images[i].label)
                    ++wrong;
            }
            errors[static_cast<std::size_t>(t)] =
                static_cast<double>(wrong) / dataset.images.size();
        }

        RatePoint point;
        point.rate = rates[r];
        point.trials = trials;
        double sum = 0.0;
        for (double e : errors) sum += e;
        point.mean_error = sum / trials;
        double var = 0.0;
        for (double e : errors) var += (e - point.mean_error) * (e - point.mean_error);
        point.stddev = trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0;
        report.points.push_back(point);
    }
    return report;
}

}  // namespace simba::fault
