#include "simba/perf_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace simba::perf {

using nlohmann::json;

bool is_skyrmionic(CostKind k) {
    return k != CostKind::PopcountBlock && k != CostKind::Comparator;
}

const char* to_string(CostKind k) {
    switch (k) {
        case CostKind::WriteBit: return "write_bit";
        case CostKind::XorOp: return "xor_op";
        case CostKind::OrOp: return "or_op";
        case CostKind::AndOp: return "and_op";
        case CostKind::Reset: return "reset";
        case CostKind::Read: return "read";
        case CostKind::PopcountBlock: return "popcount_block";
        case CostKind::Comparator: return "comparator";
    }
    return "?";
}

CostKind cost_kind_from_string(const std::string& s) {
    for (CostKind k : kAllCostKinds)
        if (s == to_string(k)) return k;
    throw ConfigError("ledger: unknown cost kind '" + s + "'");
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::PaperText: return "paper_text";
        case Provenance::Calibrated: return "calibrated";
        case Provenance::Default: return "default";
    }
    return "?";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "paper_text") return Provenance::PaperText;
    if (s == "calibrated") return Provenance::Calibrated;
    if (s == "default") return Provenance::Default;
    throw ConfigError("ledger: unknown provenance '" + s + "'");
}

const CostEntry& CostLedger::at(CostKind k) const {
    const auto& e = entries_[static_cast<int>(k)];
    if (!e) throw MissingCostEntry(std::string("ledger: no entry for ") + to_string(k));
    return *e;
}

CostEntry& CostLedger::at(CostKind k) {
    auto& e = entries_[static_cast<int>(k)];
    if (!e) throw MissingCostEntry(std::string("ledger: no entry for ") + to_string(k));
    return *e;
}

void CostLedger::require_complete() const {
    for (CostKind k : kAllCostKinds)
        if (!has(k)) throw MissingCostEntry(std::string("ledger: no entry for ") + to_string(k));
    for (CostKind k : kAllCostKinds) {
        const CostEntry& e = at(k);
        if (e.energy_pj < 0.0 || e.latency_ns < 0.0)
            throw ConfigError(std::string("ledger: negative cost for ") + to_string(k));
    }
}

void CostLedger::to_json_file(const std::string& path) const {
    require_complete();
    json j;
    for (CostKind k : kAllCostKinds) {
        const CostEntry& e = at(k);
        j[to_string(k)] = {{"energy_pj", e.energy_pj},
                           {"latency_ns", e.latency_ns},
                           {"provenance", to_string(e.provenance)}};
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("ledger: cannot write " + path);
    out << j.dump(2) << "\n";
}

CostLedger CostLedger::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("ledger: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("ledger: " + path + ": " + e.what());
    }
    CostLedger ledger;
    try {
        for (CostKind k : kAllCostKinds) {
            const json& je = j.at(to_string(k));
            ledger.set(k, {je.at("energy_pj").get<double>(), je.at("latency_ns").get<double>(),
                           provenance_from_string(je.at("provenance").get<std::string>())});
        }
    } catch (const json::exception& e) {
        throw ParseError("ledger: " + path + ": " + e.what());
    }
    ledger.require_complete();
    return ledger;
}

void RollupParams::validate() const {
    if (parallel_simc_units < 1) throw ConfigError("rollup: parallel_simc_units must be >= 1");
    if (cells_per_unit < 1) throw ConfigError("rollup: cells_per_unit must be >= 1");
    if (popcount_block_bits < 1) throw ConfigError("rollup: popcount_block_bits must be >= 1");
}

LayerPrimitiveCounts primitive_counts(const bnn::LayerOpCounts& ops, const RollupParams& params) {
    params.validate();
    LayerPrimitiveCounts c;
    c.at(CostKind::XorOp) = ops.xor_ops;
    c.at(CostKind::OrOp) = ops.or_ops;
    c.at(CostKind::AndOp) = ops.and_ops;
    // Every 2-bit gate op writes both operands, reads one result, and uses
    // one cell until the shared-film reset reclaims the whole unit.
    const long long gates = ops.gate_ops();
    c.at(CostKind::WriteBit) = 2 * gates;
    c.at(CostKind::Read) = gates;
    c.at(CostKind::Reset) = (gates + params.cells_per_unit - 1) / params.cells_per_unit;
    c.at(CostKind::PopcountBlock) = ops.popcount_blocks;
    c.at(CostKind::Comparator) = ops.comparator_ops;
    return c;
}

RollupReport rollup(const bnn::BnnTopology& topo, const CostLedger& ledger,
                    const RollupParams& params) {
    params.validate();
    ledger.require_complete();
    const std::vector<bnn::LayerOpCounts> ops = bnn::op_counts(topo, params.popcount_block_bits);

    RollupReport report;
    double total_energy_pj = 0.0;
    double total_latency_ns = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        LayerReport lr;
        lr.index = static_cast<int>(i);
        lr.kind = ops[i].kind;
        lr.counts = primitive_counts(ops[i], params);
        for (CostKind k : kAllCostKinds) {
            const long long n = lr.counts.at(k);
            if (n == 0) continue;
            const CostEntry& e = ledger.at(k);
            const double energy = static_cast<double>(n) * e.energy_pj;
            const long long chains =
                (n + params.parallel_simc_units - 1) / params.parallel_simc_units;
            const double latency = static_cast<double>(chains) * e.latency_ns;
            lr.energy_by_kind_pj[static_cast<int>(k)] = energy;
            lr.latency_by_kind_ns[static_cast<int>(k)] = latency;
            lr.energy_pj += energy;
            lr.latency_ns += latency;
        }
        total_energy_pj += lr.energy_pj;
        total_latency_ns += lr.latency_ns;
        report.layers.push_back(lr);
    }
    report.total_energy_mj = total_energy_pj * 1e-9;
    report.total_latency_ms = total_latency_ns * 1e-6;
    report.throughput_img_per_s =
        report.total_latency_ms > 0.0 ? throughput(report.total_latency_ms) : 0.0;
    return report;
}

double throughput(double latency_per_inference_ms) {
    if (latency_per_inference_ms <= 0.0)
        throw ConfigError("throughput: latency must be > 0");
    return 1000.0 / latency_per_inference_ms;
}

CalibrationPriors CalibrationPriors::from_timings(const simc::ArrayTimings& t,
                                                  double comparator_ns) {
    CalibrationPriors p;
    p.write_ns = t.write_drive_ns + t.relaxation_ns;
    p.and_ns = t.and_drive_ns + t.relaxation_ns;
    p.or_ns = t.or_drive_ns + t.relaxation_ns;
    p.xor_ns = p.and_ns + p.or_ns;  // two-phase protocol
    p.reset_ns = t.reset_ns;
    p.read_ns = t.read_ns;
    p.comparator_ns = comparator_ns;
    return p;
}

double CalibrationPriors::weight(CostKind k) const {
    switch (k) {
        case CostKind::WriteBit: return write_ns;
        case CostKind::XorOp: return xor_ns;
        case CostKind::OrOp: return or_ns;
        case CostKind::AndOp: return and_ns;
        case CostKind::Reset: return reset_ns;
        case CostKind::Read: return read_ns;
        case CostKind::Comparator: return comparator_ns;
        case CostKind::PopcountBlock: return 0.0;  // fixed, never solved
    }
    return 0.0;
}

CostLedger calibrate(const Headline& headline, const bnn::BnnTopology& topo,
                     const RollupParams& params, const periph::PeripheralConfig& periph,
                     const CalibrationPriors& priors) {
    params.validate();
    periph.validate();
    if (headline.energy_mj < 0.0 || headline.latency_ms < 0.0)
        throw Infeasible("calibrate: negative headline");

    const std::vector<bnn::LayerOpCounts> ops = bnn::op_counts(topo, params.popcount_block_bits);

    // Accumulate totals (energy side) and per-layer parallel chains (latency
    // side) for every kind.
    std::array<long long, kCostKindCount> total_counts{};
    std::array<long long, kCostKindCount> total_chains{};
    for (const bnn::LayerOpCounts& layer_ops : ops) {
        const LayerPrimitiveCounts c = primitive_counts(layer_ops, params);
        for (CostKind k : kAllCostKinds) {
            const long long n = c.at(k);
            total_counts[static_cast<int>(k)] += n;
            if (n > 0)
                total_chains[static_cast<int>(k)] +=
                    (n + params.parallel_simc_units - 1) / params.parallel_simc_units;
        }
    }

    const double target_energy_pj = headline.energy_mj * 1e9;
    const double target_latency_ns = headline.latency_ms * 1e6;
    const double fixed_energy_pj =
        static_cast<double>(total_counts[static_cast<int>(CostKind::PopcountBlock)]) *
        periph.popcount_block_energy_pj;
    const double fixed_latency_ns =
        static_cast<double>(total_chains[static_cast<int>(CostKind::PopcountBlock)]) *
        periph.popcount_block_latency_ns;

    if (target_energy_pj < fixed_energy_pj)
        throw Infeasible("calibrate: fixed popcount energy alone exceeds the headline");
    if (target_latency_ns < fixed_latency_ns)
        throw Infeasible("calibrate: fixed popcount latency alone exceeds the headline");

    double energy_denom = 0.0;
    double latency_denom = 0.0;
    for (CostKind k : kAllCostKinds) {
        if (k == CostKind::PopcountBlock) continue;
        energy_denom += static_cast<double>(total_counts[static_cast<int>(k)]) * priors.weight(k);
        latency_denom += static_cast<double>(total_chains[static_cast<int>(k)]) * priors.weight(k);
    }
    const double free_energy = target_energy_pj - fixed_energy_pj;
    const double free_latency = target_latency_ns - fixed_latency_ns;
    if (energy_denom == 0.0 && free_energy > 0.0)
        throw Infeasible("calibrate: no free entries can absorb the energy headline");
    if (latency_denom == 0.0 && free_latency > 0.0)
        throw Infeasible("calibrate: no free entries can absorb the latency headline");

    const double s_energy = energy_denom > 0.0 ? free_energy / energy_denom : 0.0;
    const double s_latency = latency_denom > 0.0 ? free_latency / latency_denom : 0.0;

    CostLedger ledger;
    for (CostKind k : kAllCostKinds) {
        if (k == CostKind::PopcountBlock) {
            ledger.set(k, {periph.popcount_block_energy_pj, periph.popcount_block_latency_ns,
                           Provenance::PaperText});
        } else {
            ledger.set(k, {s_energy * priors.weight(k), s_latency * priors.weight(k),
                           Provenance::Calibrated});
        }
    }
    return ledger;
}

void MaterialSweepTable::set_rows(const std::string& param, std::vector<SweepRow> rows) {
    if (rows.empty()) throw ConfigError("sweep table: empty row list for " + param);
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.relative_change < b.relative_change; });
    bool has_baseline = false;
    for (const SweepRow& r : rows) {
        if (r.energy_multiplier <= 0.0 || r.speedup <= 0.0)
            throw ConfigError("sweep table: multipliers must be > 0 for " + param);
        if (r.relative_change == 0.0) {
            if (r.energy_multiplier != 1.0 || r.speedup != 1.0)
                throw ConfigError("sweep table: baseline row must be (0, 1, 1) for " + param);
            has_baseline = true;
        }
    }
    if (!has_baseline) throw ConfigError("sweep table: missing baseline row for " + param);
    for (auto& [name, existing] : tables_) {
        if (name == param) {
            existing = std::move(rows);
            return;
        }
    }
    tables_.emplace_back(param, std::move(rows));
}

bool MaterialSweepTable::has(const std::string& param) const {
    for (const auto& [name, rows] : tables_)
        if (name == param) return true;
    return false;
}

const std::vector<SweepRow>& MaterialSweepTable::rows(const std::string& param) const {
    for (const auto& [name, rows] : tables_)
        if (name == param) return rows;
    throw OutOfRange("sweep table: unknown parameter '" + param + "'");
}

std::vector<std::string> MaterialSweepTable::params() const {
    std::vector<std::string> names;
    for (const auto& [name, rows] : tables_) names.push_back(name);
    return names;
}

SweepRow MaterialSweepTable::interpolate(const std::string& param, double relative_change) const {
    const std::vector<SweepRow>& rs = rows(param);
    if (relative_change < rs.front().relative_change ||
        relative_change > rs.back().relative_change)
        throw OutOfRange("sweep: relative change " + std::to_string(relative_change) +
                         " outside the anchored range for " + param);
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
        const SweepRow& lo = rs[i];
        const SweepRow& hi = rs[i + 1];
        if (relative_change >= lo.relative_change && relative_change <= hi.relative_change) {
            const double span = hi.relative_change - lo.relative_change;
            const double t = span > 0.0 ? (relative_change - lo.relative_change) / span : 0.0;
            return {relative_change,
                    lo.energy_multiplier + t * (hi.energy_multiplier - lo.energy_multiplier),
                    lo.speedup + t * (hi.speedup - lo.speedup)};
        }
    }
    return rs.back();  // single-row table, relative_change == anchor
}

CostLedger apply_material_sweep(const CostLedger& ledger, const std::string& param,
                                double relative_change, const MaterialSweepTable& table,
                                bool affect_peripherals) {
    ledger.require_complete();
    const SweepRow row = table.interpolate(param, relative_change);
    CostLedger out = ledger;
    for (CostKind k : kAllCostKinds) {
        if (!is_skyrmionic(k) && !affect_peripherals) continue;
        CostEntry e = out.at(k);
        const bool changed = row.energy_multiplier != 1.0 || row.speedup != 1.0;
        e.energy_pj *= row.energy_multiplier;
        e.latency_ns /= row.speedup;
        if (changed && e.provenance == Provenance::PaperText) e.provenance = Provenance::Calibrated;
        out.set(k, e);
    }
    return out;
}

}  // namespace simba::perf
