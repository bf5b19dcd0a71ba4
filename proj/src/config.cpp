#include "simba/config.hpp"

#include <fstream>

#include <json.hpp>

namespace simba {

using nlohmann::json;

namespace {

double get_num(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
    if (!j.at(key).is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
    return j.at(key).get<double>();
}

bool get_bool(const json& j, const char* key, const std::string& where, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_boolean()) throw ConfigError(where + ": '" + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

const json& section(const json& j, const char* name, const std::string& file) {
    if (!j.contains(name)) throw ConfigError(file + ": missing section '" + name + "'");
    return j.at(name);
}

}  // namespace

perf::RollupParams SimulationConfig::rollup_params() const {
    perf::RollupParams p;
    p.parallel_simc_units = perf.parallel_simc_units;
    p.cells_per_unit = array.cells();
    p.popcount_block_bits = peripherals.popcount_block_bits;
    return p;
}

perf::CalibrationPriors SimulationConfig::calibration_priors() const {
    return perf::CalibrationPriors::from_timings(array.timings, perf.comparator_prior_ns);
}

SimulationConfig SimulationConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("config: " + path + ": " + e.what());
    }

    SimulationConfig cfg;

    // device_model
    {
        const json& jd = section(j, "device_model", path);
        const std::string where = path + ": device_model";
        const json& jm = section(jd, "material", path);
        cfg.device.material.saturation_magnetization_a_per_m =
            get_num(jm, "saturation_magnetization_a_per_m", where);
        cfg.device.material.anisotropy_density_j_per_m3 =
            get_num(jm, "anisotropy_density_j_per_m3", where);
        cfg.device.material.damping_ratio = get_num(jm, "damping_ratio", where);
        cfg.device.material.wavelength_nm = get_num(jm, "wavelength_nm", where);
        cfg.device.material.skyrmion_radius_nm = get_num(jm, "skyrmion_radius_nm", where);

        const json& jw = section(jd, "wave", path);
        cfg.wave = device::WaveParams::from_wavelength(
            cfg.device.material.wavelength_nm, get_num(jw, "amplitude_emitted", where),
            get_num(jw, "amplitude_scattered", where),
            get_num(jw, "angular_frequency_rad_per_ns", where),
            get_num(jw, "decay_fit_per_nm", where), get_num(jw, "phase_fit_rad", where));
        cfg.wave.calibrated = get_bool(jw, "calibrated", where, false);

        const json& jg = section(jd, "geometry", path);
        cfg.device.geometry.dist_input_to_output_nm =
            get_num(jg, "dist_input_to_output_nm", where);
        cfg.device.geometry.dist_output_to_output_nm =
            get_num(jg, "dist_output_to_output_nm", where);

        const json& jp = section(jd, "phase_windows", path);
        cfg.device.windows.attenuate_below_v = get_num(jp, "attenuate_below_v", where);
        cfg.device.windows.oscillate_low_v = get_num(jp, "oscillate_low_v", where);
        cfg.device.windows.oscillate_high_v = get_num(jp, "oscillate_high_v", where);
        cfg.device.windows.nucleate_above_v = get_num(jp, "nucleate_above_v", where);

        const json& jn = section(jd, "nucleation", path);
        cfg.device.widths.fast_width_ns = get_num(jn, "fast_width_ns", where);
        cfg.device.widths.slow_width_ns = get_num(jn, "slow_width_ns", where);
    }

    // simc_array
    {
        const json& ja = section(j, "simc_array", path);
        const std::string where = path + ": simc_array";
        cfg.array.rows = static_cast<int>(get_num(ja, "rows", where));
        cfg.array.cols = static_cast<int>(get_num(ja, "cols", where));

        const json& jr = section(ja, "resistance", path);
        cfg.array.resistance.r_parallel_ohm = get_num(jr, "r_parallel_ohm", where);
        cfg.array.resistance.r_antiparallel_ohm = get_num(jr, "r_antiparallel_ohm", where);

        const json& jv = section(ja, "voltages", path);
        cfg.array.voltages.write_v = get_num(jv, "write_v", where);
        cfg.array.voltages.compute_v = get_num(jv, "compute_v", where);
        cfg.array.voltages.read_v = get_num(jv, "read_v", where);
        cfg.array.voltages.read_disturb_threshold_v =
            get_num(jv, "read_disturb_threshold_v", where);

        const json& jt = section(ja, "timings", path);
        cfg.array.timings.write_drive_ns = get_num(jt, "write_drive_ns", where);
        cfg.array.timings.relaxation_ns = get_num(jt, "relaxation_ns", where);
        cfg.array.timings.and_drive_ns = get_num(jt, "and_drive_ns", where);
        cfg.array.timings.or_drive_ns = get_num(jt, "or_drive_ns", where);
        cfg.array.timings.read_ns = get_num(jt, "read_ns", where);
        cfg.array.timings.reset_ns = get_num(jt, "reset_ns", where);
        cfg.array.timings.reset_calibrated = get_bool(jt, "reset_calibrated", where, false);
    }

    // peripherals
    {
        const json& jp = section(j, "peripherals", path);
        const std::string where = path + ": peripherals";
        cfg.peripherals.popcount_block_bits =
            static_cast<int>(get_num(jp, "popcount_block_bits", where));
        cfg.peripherals.popcount_block_energy_pj = get_num(jp, "popcount_block_energy_pj", where);
        cfg.peripherals.popcount_block_latency_ns =
            get_num(jp, "popcount_block_latency_ns", where);
    }

    // perf_model
    {
        const json& jp = section(j, "perf_model", path);
        const std::string where = path + ": perf_model";
        cfg.perf.headline.energy_mj = get_num(jp, "headline_energy_mj", where);
        cfg.perf.headline.latency_ms = get_num(jp, "headline_latency_ms", where);
        cfg.perf.parallel_simc_units =
            static_cast<long long>(get_num(jp, "parallel_simc_units", where));
        cfg.perf.comparator_prior_ns = get_num(jp, "comparator_prior_ns", where);
        cfg.perf.headline_includes_peripherals =
            get_bool(jp, "headline_includes_peripherals", where, true);
        cfg.perf.sweep_affects_peripherals =
            get_bool(jp, "sweep_affects_peripherals", where, false);
        cfg.perf.write_current_ua = get_num(jp, "write_current_ua", where);
    }

    // material_sweeps
    {
        const json& js = section(j, "material_sweeps", path);
        const std::string where = path + ": material_sweeps";
        for (const auto& [param, jrows] : js.items()) {
            if (!jrows.is_array()) throw ConfigError(where + ": rows for " + param);
            std::vector<perf::SweepRow> rows;
            for (const json& jr : jrows)
                rows.push_back({get_num(jr, "relative_change", where),
                                get_num(jr, "energy_multiplier", where),
                                get_num(jr, "speedup", where)});
            cfg.sweeps.set_rows(param, std::move(rows));
        }
    }

    // fault_lab
    {
        const json& jf = section(j, "fault_lab", path);
        const std::string where = path + ": fault_lab";
        cfg.faults.trials_per_rate = static_cast<int>(get_num(jf, "trials_per_rate", where));
        cfg.faults.default_magnitude = static_cast<int>(get_num(jf, "default_magnitude", where));
        if (cfg.faults.trials_per_rate <= 0)
            throw ConfigError(where + ": trials_per_rate must be >= 1");
        if (cfg.faults.default_magnitude < 1)
            throw ConfigError(where + ": default_magnitude must be >= 1");
    }

    // Fail fast: everything validates before any simulation starts.
    cfg.device.validate();
    cfg.wave.validate();
    cfg.array.validate();
    cfg.peripherals.validate();
    if (cfg.perf.parallel_simc_units < 1)
        throw ConfigError(path + ": perf_model.parallel_simc_units must be >= 1");
    if (cfg.perf.comparator_prior_ns <= 0.0)
        throw ConfigError(path + ": perf_model.comparator_prior_ns must be > 0");

    return cfg;
}

}  // namespace simba
