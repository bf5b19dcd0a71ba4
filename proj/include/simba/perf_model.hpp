#ifndef SIMBA_PERF_MODEL_HPP
#define SIMBA_PERF_MODEL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "simba/bnn_engine.hpp"
#include "simba/errors.hpp"
#include "simba/peripherals.hpp"
#include "simba/simc_array.hpp"
#include "simba/topology.hpp"

namespace simba::perf {

enum class CostKind : int {
    WriteBit = 0,
    XorOp,
    OrOp,
    AndOp,
    Reset,
    Read,
    PopcountBlock,
    Comparator,
};
constexpr int kCostKindCount = 8;
constexpr std::array<CostKind, kCostKindCount> kAllCostKinds = {
    CostKind::WriteBit, CostKind::XorOp,         CostKind::OrOp,  CostKind::AndOp,
    CostKind::Reset,    CostKind::Read,          CostKind::PopcountBlock,
    CostKind::Comparator};

// Kinds whose cost scales with the skyrmionic device physics; the SOT-MTJ
// peripherals (popcount, comparator) are excluded from material sweeps by
// default.
bool is_skyrmionic(CostKind k);

const char* to_string(CostKind k);
CostKind cost_kind_from_string(const std::string& s);

enum class Provenance { PaperText, Calibrated, Default };
const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct CostEntry {
    double energy_pj = 0.0;
    double latency_ns = 0.0;
    Provenance provenance = Provenance::Default;
};

class CostLedger {
public:
    bool has(CostKind k) const { return entries_[static_cast<int>(k)].has_value(); }
    const CostEntry& at(CostKind k) const;
    CostEntry& at(CostKind k);
    void set(CostKind k, CostEntry e) { entries_[static_cast<int>(k)] = e; }

    // Throws MissingCostEntry naming the first absent kind.
    void require_complete() const;

    void to_json_file(const std::string& path) const;
    static CostLedger from_json_file(const std::string& path);

private:
    std::array<std::optional<CostEntry>, kCostKindCount> entries_;
};

// Knobs shared by rollup and calibrate.
struct RollupParams {
    long long parallel_simc_units = 4096;  // SIMC units working one layer
    int cells_per_unit = 4096;             // bit-cells sharing one HM film
    int popcount_block_bits = 100;

    void validate() const;
};

// Static primitive counts for one layer (gate ops expanded into the write /
// compute / read / reset protocol).
struct LayerPrimitiveCounts {
    std::array<long long, kCostKindCount> counts{};

    long long at(CostKind k) const { return counts[static_cast<int>(k)]; }
    long long& at(CostKind k) { return counts[static_cast<int>(k)]; }
};

LayerPrimitiveCounts primitive_counts(const bnn::LayerOpCounts& ops, const RollupParams& params);

struct LayerReport {
    int index = 0;
    bnn::LayerKind kind = bnn::LayerKind::BinConv;
    double energy_pj = 0.0;
    double latency_ns = 0.0;
    std::array<double, kCostKindCount> energy_by_kind_pj{};
    std::array<double, kCostKindCount> latency_by_kind_ns{};
    LayerPrimitiveCounts counts;
};

struct RollupReport {
    std::vector<LayerReport> layers;
    double total_energy_mj = 0.0;
    double total_latency_ms = 0.0;
    double throughput_img_per_s = 0.0;
};

// Energy: sum of count * unit energy over every primitive of every layer.
// Latency: layers run sequentially; within a layer each primitive kind runs
// as ceil(count / parallel units) serial chains of its unit latency.
RollupReport rollup(const bnn::BnnTopology& topo, const CostLedger& ledger,
                    const RollupParams& params);

double throughput(double latency_per_inference_ms);

// Back-solves the free ledger entries so that rollup reproduces the headline
// totals. PopcountBlock is pinned (paper-text cost) and never moves. The
// free energies and latencies are proportional to the drive-duration priors,
// one scale factor per objective, which makes the solve deterministic and
// linear in the headline.
struct CalibrationPriors {
    // Effective drive durations (ns) used as ratio weights.
    double write_ns = 2.5;
    double xor_ns = 8.5;  // 3.0 ns phase 1 + 5.5 ns phase 2
    double or_ns = 5.5;
    double and_ns = 3.0;
    double reset_ns = 2.0;
    double read_ns = 1.0;
    double comparator_ns = 1.0;

    static CalibrationPriors from_timings(const simc::ArrayTimings& t, double comparator_ns);
    double weight(CostKind k) const;
};

struct Headline {
    double energy_mj = 26.7;
    double latency_ms = 2.7;
};

CostLedger calibrate(const Headline& headline, const bnn::BnnTopology& topo,
                     const RollupParams& params, const periph::PeripheralConfig& periph,
                     const CalibrationPriors& priors);

// --- material sensitivity ---

struct SweepRow {
    double relative_change = 0.0;
    double energy_multiplier = 1.0;
    double speedup = 1.0;
};

// Piecewise-linear anchor tables per material parameter ("alpha", "ku",
// "ms"); each table must contain the baseline row (0, 1, 1).
class MaterialSweepTable {
public:
    void set_rows(const std::string& param, std::vector<SweepRow> rows);
    bool has(const std::string& param) const;
    const std::vector<SweepRow>& rows(const std::string& param) const;
    std::vector<std::string> params() const;

    // Linear interpolation between anchors; outside the anchor range throws
    // OutOfRange.
    SweepRow interpolate(const std::string& param, double relative_change) const;

private:
    std::vector<std::pair<std::string, std::vector<SweepRow>>> tables_;
};

// Scales the skyrmionic entries by the interpolated row: energies multiply
// by energy_multiplier, latencies divide by speedup. Peripheral entries are
// untouched unless `affect_peripherals` is set (a scaled PaperText entry is
// retagged Calibrated; nothing silently keeps a paper tag on changed data).
CostLedger apply_material_sweep(const CostLedger& ledger, const std::string& param,
                                double relative_change, const MaterialSweepTable& table,
                                bool affect_peripherals = false);

}  // namespace simba::perf

#endif  // SIMBA_PERF_MODEL_HPP
