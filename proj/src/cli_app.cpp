#include "simba/cli_app.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simba/bnn_engine.hpp"
#include "simba/config.hpp"
#include "simba/dataset.hpp"
#include "simba/device_model.hpp"
#include "simba/fault_lab.hpp"
#include "simba/perf_model.hpp"
#include "simba/presets.hpp"
#include "simba/simc_array.hpp"
#include "simba/topology.hpp"
#include "simba/weights.hpp"

namespace simba::cli {

namespace {

namespace fs = std::filesystem;

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

void ensure_out_dir(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
}

// --- gate ---

int cmd_gate(const std::string& config_path, int a, int b, const std::string& op) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);
    simc::Gate gate;
    if (op == "and")
        gate = simc::Gate::And;
    else if (op == "or")
        gate = simc::Gate::Or;
    else if (op == "xor")
        gate = simc::Gate::Xor;
    else
        throw ConfigError("gate: unknown op '" + op + "' (expected and|or|xor)");

    simc::SimcArray array(cfg.array, cfg.device);
    double total = 0.0;
    std::printf("gate %s: A=%d B=%d\n", op.c_str(), a, b);

    auto show_write = [&](simc::Region r, int value) {
        const simc::WriteResult w = array.write_bit(0, 0, r, value);
        total += w.elapsed_ns;
        if (value)
            std::printf("  write %-2s     %s ns (%s ns drive + %s ns relaxation)\n",
                        simc::to_string(r), format_fixed(w.elapsed_ns, 1).c_str(),
                        format_fixed(cfg.array.timings.write_drive_ns, 1).c_str(),
                        format_fixed(cfg.array.timings.relaxation_ns, 1).c_str());
        else
            std::printf("  write %-2s     %s ns (switch off)\n", simc::to_string(r),
                        format_fixed(0.0, 1).c_str());
    };
    show_write(simc::Region::A, a);
    show_write(simc::Region::B, b);

    const simc::ComputeResult res = array.compute(0, 0, gate);
    for (int p = 0; p < res.phase_count; ++p) {
        const simc::PhaseTiming& ph = res.phases[p];
        std::printf("  compute %-2s   %s ns (%s ns drive + %s ns relaxation) -> %d\n",
                    simc::to_string(ph.target),
                    format_fixed(ph.drive_ns + ph.relaxation_ns, 1).c_str(),
                    format_fixed(ph.drive_ns, 1).c_str(),
                    format_fixed(ph.relaxation_ns, 1).c_str(), ph.result_bit);
    }
    total += res.elapsed_ns;

    const int bit = array.read(0, 0, res.output);
    total += cfg.array.timings.read_ns;
    std::printf("  read %-2s      %s ns (%s V sense)\n", simc::to_string(res.output),
                format_fixed(cfg.array.timings.read_ns, 1).c_str(),
                format_fixed(cfg.array.voltages.read_v, 2).c_str());

    const double reset_ns = array.reset();
    total += reset_ns;
    std::printf("  reset        %s ns\n", format_fixed(reset_ns, 1).c_str());
    std::printf("result: %d\n", bit);
    std::printf("total: %s ns\n", format_fixed(total, 1).c_str());
    return kExitOk;
}

// --- waveform ---

int cmd_waveform(const std::string& config_path, const std::string& wave, double x0, double x1,
                 double dx, double t, std::optional<double> d_nm, const std::string& out_path) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);
    if (wave != "emitted" && wave != "scattered" && wave != "total")
        throw ConfigError("waveform: --wave must be emitted|scattered|total");
    if (dx <= 0.0 || x1 < x0) throw ConfigError("waveform: bad x range");

    const double d = d_nm.value_or(cfg.device.geometry.dist_input_to_output_nm);
    const double phase = device::phase_difference(cfg.wave.wave_vector_per_nm, d,
                                                  cfg.device.material.skyrmion_radius_nm);

    std::ostringstream rows;
    rows << "x_nm,t_ns,amplitude\n";
    for (double x = x0; x <= x1 + 1e-12; x += dx) {
        double amp = 0.0;
        if (wave == "emitted")
            amp = device::emitted_wave(cfg.wave, x, t);
        else if (wave == "scattered")
            amp = device::scattered_wave(cfg.wave, x, t, phase);
        else
            amp = device::total_wave(cfg.wave, x, t, phase);
        rows << format_fixed(x, 3) << "," << format_fixed(t, 3) << ","
             << format_fixed(amp, 9) << "\n";
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << rows.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("waveform: cannot write " + out_path);
        out << rows.str();
    }
    return kExitOk;
}

// --- dump-array ---

int cmd_dump_array(const std::string& config_path, const std::string& pattern,
                   const std::string& gate_name, const std::string& out_path) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);

    // Pattern rows are ';'-separated, cells ' '-separated, each cell "ab".
    std::vector<std::vector<std::pair<int, int>>> rows;
    std::stringstream row_stream(pattern);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        std::vector<std::pair<int, int>> cells;
        std::stringstream cell_stream(row);
        std::string cell;
        while (cell_stream >> cell) {
            if (cell.size() != 2 || (cell[0] != '0' && cell[0] != '1') ||
                (cell[1] != '0' && cell[1] != '1'))
                throw ConfigError("dump-array: cell '" + cell + "' must be two bits");
            cells.emplace_back(cell[0] - '0', cell[1] - '0');
        }
        if (!cells.empty()) rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw ConfigError("dump-array: empty pattern");
    const std::size_t n_cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n_cols) throw ConfigError("dump-array: ragged pattern rows");
    if (static_cast<int>(rows.size()) > cfg.array.rows ||
        static_cast<int>(n_cols) > cfg.array.cols)
        throw ConfigError("dump-array: pattern larger than the configured array");

    std::optional<simc::Gate> gate;
    if (!gate_name.empty()) {
        if (gate_name == "and")
            gate = simc::Gate::And;
        else if (gate_name == "or")
            gate = simc::Gate::Or;
        else if (gate_name == "xor")
            gate = simc::Gate::Xor;
        else
            throw ConfigError("dump-array: unknown gate '" + gate_name + "'");
    }

    simc::SimcArray array(cfg.array, cfg.device);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n_cols; ++c) {
            array.write_bit(static_cast<int>(r), static_cast<int>(c), simc::Region::A,
                            rows[r][c].first);
            array.write_bit(static_cast<int>(r), static_cast<int>(c), simc::Region::B,
                            rows[r][c].second);
            if (gate) array.compute(static_cast<int>(r), static_cast<int>(c), *gate);
        }

    std::ostringstream dump;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            const simc::BitCell& cell = array.cell(static_cast<int>(r), static_cast<int>(c));
            if (c) dump << ' ';
            dump << int(cell.at(simc::Region::A)) << int(cell.at(simc::Region::B))
                 << int(cell.at(simc::Region::O1)) << int(cell.at(simc::Region::O2));
        }
        dump << '\n';
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << dump.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("dump-array: cannot write " + out_path);
        out << dump.str();
    }
    return kExitOk;
}

// --- synth-dataset / make-weights ---

int cmd_synth_dataset(const std::string& out_path, int count, std::uint64_t seed, double bias) {
    bnn::SyntheticParams params;
    params.count = count;
    params.seed = seed;
    params.bright_bias = bias;
    bnn::write_synthetic_cifar(out_path, params);
    std::printf("wrote %d records to %s\n", count, out_path.c_str());
    return kExitOk;
}

int cmd_make_weights(const std::string& topo_path, const std::string& out_path,
                     const std::string& preset, std::uint64_t seed) {
    const bnn::BnnTopology topo = bnn::BnnTopology::from_json_file(topo_path);
    bnn::WeightSet ws;
    if (preset == "desk")
        ws = bnn::make_desk_weights(topo);
    else if (preset == "random")
        ws = bnn::make_random_weights(topo, seed);
    else
        throw ConfigError("make-weights: unknown preset '" + preset + "'");
    bnn::save_smbw(out_path, topo, ws);
    std::printf("wrote %s weights for %zu layers to %s\n", preset.c_str(),
                topo.layer_count(), out_path.c_str());
    return kExitOk;
}

// --- infer ---

int cmd_infer(const std::string& config_path, const std::string& topo_path,
              const std::string& weights_path, const std::string& dataset_path,
              const std::string& engine, long long limit, const std::string& out_dir) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);
    const bnn::BnnTopology topo = bnn::BnnTopology::from_json_file(topo_path);
    const bnn::WeightSet weights = bnn::load_smbw(weights_path, topo);
    const bnn::Dataset dataset = bnn::load_cifar10(dataset_path, limit);
    if (engine != "oracle" && engine != "simc" && engine != "both")
        throw ConfigError("infer: --engine must be oracle|simc|both");

    const bool run_oracle = engine != "simc";
    const bool run_simc = engine != "oracle";

    ensure_out_dir(out_dir);
    const std::string csv_path =
        (fs::path(out_dir.empty() ? "." : out_dir) / "predictions.csv").string();

    std::ostringstream csv;
    csv << "image_index,label";
    if (run_oracle) csv << ",predicted_oracle";
    if (run_simc) csv << ",predicted_simc";
    csv << "\n";

    long long correct = 0;
    for (std::size_t i = 0; i < dataset.images.size(); ++i) {
        const bnn::LabeledImage& img = dataset.images[i];
        std::optional<bnn::InferTrace> oracle_trace, simc_trace;
        if (run_oracle) {
            bnn::OracleBackend backend(cfg.peripherals.popcount_block_bits);
            oracle_trace = bnn::infer(img.pixels, topo, weights, backend);
        }
        if (run_simc) {
            bnn::SimcBackend backend(cfg.array, cfg.device, cfg.peripherals);
            simc_trace = bnn::infer(img.pixels, topo, weights, backend);
        }
        if (run_oracle && run_simc) {
            // Divergence check, layer by layer.
            for (std::size_t l = 0; l < oracle_trace->layer_outputs.size(); ++l) {
                if (!(oracle_trace->layer_outputs[l] == simc_trace->layer_outputs[l])) {
                    std::fprintf(stderr,
                                 "engine divergence: image %zu, first differing layer %zu\n", i,
                                 l);
                    return kExitDivergence;
                }
            }
            if (oracle_trace->final_scores != simc_trace->final_scores ||
                oracle_trace->predicted != simc_trace->predicted) {
                std::fprintf(stderr,
                             "engine divergence: image %zu, first differing layer %zu (final)\n",
                             i, topo.layer_count() - 1);
                return kExitDivergence;
            }
        }
        const int predicted = run_oracle ? oracle_trace->predicted : simc_trace->predicted;
        if (predicted == img.label) ++correct;
        csv << i << "," << img.label;
        if (run_oracle) csv << "," << oracle_trace->predicted;
        if (run_simc) csv << "," << simc_trace->predicted;
        csv << "\n";
    }
    csv << "# accuracy: "
        << format_fixed(static_cast<double>(correct) / dataset.images.size(), 6) << " over "
        << dataset.images.size() << " images\n";

    std::ofstream out(csv_path);
    if (!out) throw ConfigError("infer: cannot write " + csv_path);
    out << csv.str();
    std::printf("wrote %s (%zu images, accuracy %s)\n", csv_path.c_str(),
                dataset.images.size(),
                format_fixed(static_cast<double>(correct) / dataset.images.size(), 4).c_str());
    return kExitOk;
}

// --- report ---

struct SweepRequest {
    std::string param;
    double relative_change = 0.0;
};

std::optional<SweepRequest> parse_sweep(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        throw ConfigError("--sweep expects param=delta, e.g. alpha=-0.333");
    SweepRequest req;
    req.param = text.substr(0, eq);
    try {
        req.relative_change = std::stod(text.substr(eq + 1));
    } catch (const std::exception&) {
        throw ConfigError("--sweep: cannot parse delta in '" + text + "'");
    }
    return req;
}

int cmd_report(const std::string& config_path, const std::string& topo_path,
               const std::string& ledger_path, const std::string& sweep_text,
               const std::string& format, const std::string& out_dir) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);
    const bnn::BnnTopology topo = bnn::BnnTopology::from_json_file(topo_path);
    if (format != "csv" && format != "table")
        throw ConfigError("report: --format must be csv|table");
    const std::optional<SweepRequest> sweep = parse_sweep(sweep_text);

    const perf::RollupParams params = cfg.rollup_params();
    perf::CostLedger ledger =
        ledger_path.empty()
            ? perf::calibrate(cfg.perf.headline, topo, params, cfg.peripherals,
                              cfg.calibration_priors())
            : perf::CostLedger::from_json_file(ledger_path);

    if (sweep)
        ledger = perf::apply_material_sweep(ledger, sweep->param, sweep->relative_change,
                                            cfg.sweeps, cfg.perf.sweep_affects_peripherals);

    const perf::RollupReport report = perf::rollup(topo, ledger, params);

    std::ostringstream body;
    if (format == "csv") {
        body << "layer,kind,energy_mj,latency_ms";
        for (perf::CostKind k : perf::kAllCostKinds) body << "," << to_string(k) << "_mj";
        body << "\n";
        for (const perf::LayerReport& lr : report.layers) {
            body << lr.index << "," << bnn::to_string(lr.kind) << ","
                 << format_fixed(lr.energy_pj * 1e-9, 6) << ","
                 << format_fixed(lr.latency_ns * 1e-6, 6);
            for (perf::CostKind k : perf::kAllCostKinds)
                body << ","
                     << format_fixed(lr.energy_by_kind_pj[static_cast<int>(k)] * 1e-9, 6);
            body << "\n";
        }
        body << "total,," << format_fixed(report.total_energy_mj, 6) << ","
             << format_fixed(report.total_latency_ms, 6);
        for (perf::CostKind k : perf::kAllCostKinds) {
            double sum = 0.0;
            for (const perf::LayerReport& lr : report.layers)
                sum += lr.energy_by_kind_pj[static_cast<int>(k)];
            body << "," << format_fixed(sum * 1e-9, 6);
        }
        body << "\n";
        body << "# throughput_img_per_s," << format_fixed(report.throughput_img_per_s, 1)
             << "\n";
    } else {
        body << "layer  kind       energy (mJ)   latency (ms)\n";
        for (const perf::LayerReport& lr : report.layers) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-6d %-10s %12s %14s\n", lr.index,
                          bnn::to_string(lr.kind), format_fixed(lr.energy_pj * 1e-9, 6).c_str(),
                          format_fixed(lr.latency_ns * 1e-6, 6).c_str());
            body << line;
        }
        char line[128];
        std::snprintf(line, sizeof(line), "%-6s %-10s %12s %14s\n", "total", "",
                      format_fixed(report.total_energy_mj, 6).c_str(),
                      format_fixed(report.total_latency_ms, 6).c_str());
        body << line;
        body << "throughput: " << format_fixed(report.throughput_img_per_s, 1) << " images/s\n";
    }

    body << "# provenance:";
    for (perf::CostKind k : perf::kAllCostKinds)
        body << " " << to_string(k) << "=" << to_string(ledger.at(k).provenance);
    body << "\n";
    if (cfg.perf.headline_includes_peripherals && ledger_path.empty())
        body << "# note: headline assumed inclusive of popcount/comparator energy\n";
    if (sweep)
        body << "# sweep: " << sweep->param << " " << format_fixed(sweep->relative_change, 4)
             << " applied to skyrmionic entries" << (cfg.perf.sweep_affects_peripherals ? " and peripherals" : "")
             << "\n";

    if (out_dir.empty()) {
        std::cout << body.str();
    } else {
        ensure_out_dir(out_dir);
        const std::string path =
            (fs::path(out_dir) / (format == "csv" ? "report.csv" : "report.txt")).string();
        std::ofstream out(path);
        if (!out) throw ConfigError("report: cannot write " + path);
        out << body.str();
        std::printf("wrote %s\n", path.c_str());
    }

    // CI gate: totals must stay on the calibrated headline unless a sweep
    // intentionally moved them.
    if (!sweep) {
        const double e_drift =
            std::abs(report.total_energy_mj - cfg.perf.headline.energy_mj) /
            cfg.perf.headline.energy_mj;
        const double l_drift =
            std::abs(report.total_latency_ms - cfg.perf.headline.latency_ms) /
            cfg.perf.headline.latency_ms;
        if (e_drift > 0.01 || l_drift > 0.01) {
            std::fprintf(stderr, "calibration drift: energy %.4f%%, latency %.4f%%\n",
                         e_drift * 100.0, l_drift * 100.0);
            return kExitDrift;
        }
    }
    return kExitOk;
}

// --- calibrate ---

int cmd_calibrate(const std::string& config_path, const std::string& topo_path,
                  const std::string& out_path) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);
    const bnn::BnnTopology topo = bnn::BnnTopology::from_json_file(topo_path);
    const perf::CostLedger ledger = perf::calibrate(
        cfg.perf.headline, topo, cfg.rollup_params(), cfg.peripherals, cfg.calibration_priors());
    ledger.to_json_file(out_path);
    std::printf("wrote calibrated ledger to %s\n", out_path.c_str());
    return kExitOk;
}

// --- faults ---

int cmd_faults(const std::string& config_path, const std::string& topo_path,
               const std::string& weights_path, const std::string& dataset_path,
               const std::string& rates_text, std::uint64_t seed, int trials, int magnitude,
               long long limit, const std::string& out_dir) {
    const SimulationConfig cfg = SimulationConfig::from_json_file(config_path);
    const bnn::BnnTopology topo = bnn::BnnTopology::from_json_file(topo_path);
    const bnn::WeightSet weights = bnn::load_smbw(weights_path, topo);
    const bnn::Dataset dataset = bnn::load_cifar10(dataset_path, limit);

    std::vector<double> rates;
    if (!rates_text.empty()) {
        std::stringstream ss(rates_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                rates.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ConfigError("faults: cannot parse rate '" + tok + "'");
            }
        }
    }

    fault::FaultSpec spec;
    spec.seed = seed;
    spec.magnitude = magnitude > 0 ? magnitude : cfg.faults.default_magnitude;
    spec.pixel_error_rate = rates.empty() ? 0.01 : rates.front();
    const int n_trials = trials > 0 ? trials : cfg.faults.trials_per_rate;

    const fault::AccuracyReport report =
        fault::accuracy_sweep(dataset, topo, weights, rates, spec, n_trials);

    std::ostringstream csv;
    csv << "rate,mean_error,stddev,trials\n";
    csv << format_fixed(0.0, 6) << "," << format_fixed(report.baseline_error, 6) << ","
        << format_fixed(0.0, 6) << ",1\n";
    for (const fault::RatePoint& p : report.points)
        csv << format_fixed(p.rate, 6) << "," << format_fixed(p.mean_error, 6) << ","
            << format_fixed(p.stddev, 6) << "," << p.trials << "\n";
    csv << "# seed: " << seed << ", magnitude: " << spec.magnitude
        << ", target: all binconv layers\n";

    if (out_dir.empty()) {
        std::cout << csv.str();
    } else {
        ensure_out_dir(out_dir);
        const std::string path = (fs::path(out_dir) / "faults.csv").string();
        std::ofstream out(path);
        if (!out) throw ConfigError("faults: cannot write " + path);
        out << csv.str();
        std::printf("wrote %s\n", path.c_str());
    }
    return kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"SIMBA: skyrmionic in-memory BNN accelerator simulator"};
    app.require_subcommand(1);

    std::string config_path = "config/simba.json";
    app.add_option("--config", config_path, "shared configuration file")->capture_default_str();

    // gate
    auto* gate = app.add_subcommand("gate", "run one bit-cell gate cycle with timing breakdown");
    int gate_a = 0, gate_b = 0;
    std::string gate_op;
    gate->add_option("--a", gate_a, "input A")->required()->check(CLI::Range(0, 1));
    gate->add_option("--b", gate_b, "input B")->required()->check(CLI::Range(0, 1));
    gate->add_option("--op", gate_op, "and|or|xor")->required();

    // waveform
    auto* waveform = app.add_subcommand("waveform", "emit spin-wave amplitudes as CSV");
    std::string wf_wave = "total", wf_out;
    double wf_x0 = 0.0, wf_x1 = 300.0, wf_dx = 1.0, wf_t = 0.0;
    std::optional<double> wf_d;
    waveform->add_option("--wave", wf_wave, "emitted|scattered|total")->capture_default_str();
    waveform->add_option("--x0", wf_x0, "start x (nm)")->capture_default_str();
    waveform->add_option("--x1", wf_x1, "end x (nm)")->capture_default_str();
    waveform->add_option("--dx", wf_dx, "step (nm)")->capture_default_str();
    waveform->add_option("--t", wf_t, "time (ns)")->capture_default_str();
    waveform->add_option("--d", wf_d, "scatterer distance (nm), default geometry");
    waveform->add_option("--out", wf_out, "output CSV file ('-' = stdout)");

    // dump-array
    auto* dump = app.add_subcommand("dump-array", "write a pattern and dump region bits");
    std::string da_pattern, da_gate, da_out;
    dump->add_option("--pattern", da_pattern, "rows ';'-separated, cells like \"10\"")->required();
    dump->add_option("--gate", da_gate, "optionally compute and|or|xor in every cell");
    dump->add_option("--out", da_out, "output file ('-' = stdout)");

    // synth-dataset
    auto* synth = app.add_subcommand("synth-dataset", "generate a synthetic CIFAR-format set");
    std::string sd_out;
    int sd_count = 256;
    std::uint64_t sd_seed = 1;
    double sd_bias = 0.02;
    synth->add_option("--out", sd_out, "output file")->required();
    synth->add_option("--count", sd_count, "record count")->capture_default_str();
    synth->add_option("--seed", sd_seed, "rng seed")->capture_default_str();
    synth->add_option("--bias", sd_bias, "class brightness bias")->capture_default_str();

    // make-weights
    auto* mw = app.add_subcommand("make-weights", "emit an SMBW weight file");
    std::string mw_topo, mw_out, mw_preset = "random";
    std::uint64_t mw_seed = 1;
    mw->add_option("--topology", mw_topo, "topology JSON")->required();
    mw->add_option("--out", mw_out, "output SMBW file")->required();
    mw->add_option("--preset", mw_preset, "desk|random")->capture_default_str();
    mw->add_option("--seed", mw_seed, "rng seed (random preset)")->capture_default_str();

    // infer
    auto* infer = app.add_subcommand("infer", "classify a dataset");
    std::string in_topo, in_weights, in_dataset, in_engine = "oracle", in_out;
    long long in_limit = -1;
    infer->add_option("--topology", in_topo, "topology JSON")->required();
    infer->add_option("--weights", in_weights, "SMBW weight file")->required();
    infer->add_option("--dataset", in_dataset, "CIFAR-format records")->required();
    infer->add_option("--engine", in_engine, "oracle|simc|both")->capture_default_str();
    infer->add_option("--limit", in_limit, "max records (-1 = all)")->capture_default_str();
    infer->add_option("--out", in_out, "output directory");

    // report
    auto* report = app.add_subcommand("report", "per-layer energy/latency roll-up");
    std::string rp_topo = "config/topology_vgg12.json", rp_ledger, rp_sweep, rp_format = "table",
                rp_out;
    report->add_option("--topology", rp_topo, "topology JSON")->capture_default_str();
    report->add_option("--ledger", rp_ledger, "cost ledger JSON (default: calibrate)");
    report->add_option("--sweep", rp_sweep, "material sweep, e.g. alpha=-0.333");
    report->add_option("--format", rp_format, "csv|table")->capture_default_str();
    report->add_option("--out", rp_out, "output directory (default: stdout)");

    // calibrate
    auto* calib = app.add_subcommand("calibrate", "back-solve and save the cost ledger");
    std::string cb_topo = "config/topology_vgg12.json", cb_out;
    calib->add_option("--topology", cb_topo, "topology JSON")->capture_default_str();
    calib->add_option("--out", cb_out, "output ledger JSON")->required();

    // faults
    auto* faults = app.add_subcommand("faults", "fault-injection accuracy sweep");
    std::string fl_topo, fl_weights, fl_dataset, fl_rates, fl_out;
    std::uint64_t fl_seed = 1;
    int fl_trials = 0, fl_magnitude = 0;
    long long fl_limit = -1;
    faults->add_option("--topology", fl_topo, "topology JSON")->required();
    faults->add_option("--weights", fl_weights, "SMBW weight file")->required();
    faults->add_option("--dataset", fl_dataset, "CIFAR-format records")->required();
    faults->add_option("--rates", fl_rates, "comma-separated error rates");
    faults->add_option("--seed", fl_seed, "rng seed")->capture_default_str();
    faults->add_option("--trials", fl_trials, "trials per rate (default from config)");
    faults->add_option("--magnitude", fl_magnitude, "max perturbation (default from config)");
    faults->add_option("--limit", fl_limit, "max records (-1 = all)")->capture_default_str();
    faults->add_option("--out", fl_out, "output directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (gate->parsed()) return cmd_gate(config_path, gate_a, gate_b, gate_op);
        if (waveform->parsed())
            return cmd_waveform(config_path, wf_wave, wf_x0, wf_x1, wf_dx, wf_t, wf_d, wf_out);
        if (dump->parsed()) return cmd_dump_array(config_path, da_pattern, da_gate, da_out);
        if (synth->parsed()) return cmd_synth_dataset(sd_out, sd_count, sd_seed, sd_bias);
        if (mw->parsed()) return cmd_make_weights(mw_topo, mw_out, mw_preset, mw_seed);
        if (infer->parsed())
            return cmd_infer(config_path, in_topo, in_weights, in_dataset, in_engine, in_limit,
                             in_out);
        if (report->parsed())
            return cmd_report(config_path, rp_topo, rp_ledger, rp_sweep, rp_format, rp_out);
        if (calib->parsed()) return cmd_calibrate(config_path, cb_topo, cb_out);
        if (faults->parsed())
            return cmd_faults(config_path, fl_topo, fl_weights, fl_dataset, fl_rates, fl_seed,
                              fl_trials, fl_magnitude, fl_limit, fl_out);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace simba::cli
