#ifndef SIMBA_CONFIG_HPP
#define SIMBA_CONFIG_HPP

#include <cstdint>
#include <string>

#include "simba/device_model.hpp"
#include "simba/perf_model.hpp"
#include "simba/peripherals.hpp"
#include "simba/simc_array.hpp"

namespace simba {

struct PerfConfig {
    perf::Headline headline;
    long long parallel_simc_units = 4096;
    double comparator_prior_ns = 1.0;
    bool headline_includes_peripherals = true;  // assumption, flagged in reports
    bool sweep_affects_peripherals = false;
    double write_current_ua = 490.0;  // reported constant; not used by the cost model
};

struct FaultConfig {
    int trials_per_rate = 100;
    int default_magnitude = 30;
};

// The single shared configuration file. Every physical constant carries its
// unit in the key name; see config/simba.json.
struct SimulationConfig {
    device::DeviceModel device;
    device::WaveParams wave;
    simc::ArrayConfig array;
    periph::PeripheralConfig peripherals;
    PerfConfig perf;
    perf::MaterialSweepTable sweeps;
    FaultConfig faults;

    perf::RollupParams rollup_params() const;
    perf::CalibrationPriors calibration_priors() const;

    // Parses and fully validates; throws ConfigError/ParseError naming the
    // file and key. Nothing downstream runs on a partially valid config.
    static SimulationConfig from_json_file(const std::string& path);
};

}  // namespace simba

#endif  // SIMBA_CONFIG_HPP
