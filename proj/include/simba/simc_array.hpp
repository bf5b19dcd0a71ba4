#ifndef SIMBA_SIMC_ARRAY_HPP
#define SIMBA_SIMC_ARRAY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "simba/device_model.hpp"
#include "simba/errors.hpp"

namespace simba::simc {

enum class Region : std::uint8_t { A = 0, B = 1, O1 = 2, O2 = 3 };
enum class Gate : std::uint8_t { And, Or, Xor };
enum class OpKind : std::uint8_t { WriteA, WriteB, ComputeO1, ComputeO2, Read, Reset };

const char* to_string(Region r);
const char* to_string(Gate g);
const char* to_string(OpKind k);

struct ResistancePair {
    double r_parallel_ohm = 10e3;       // R_P
    double r_antiparallel_ohm = 25e3;   // R_AP

    void validate() const;
};

// MTJ resistance as a function of the free/pinned alignment m.m_p in [-1,1].
double resistance_model(double alignment, const ResistancePair& rp);

// Convenience mapping: no skyrmion -> parallel (+1), skyrmion -> anti-parallel (-1).
double resistance_for_bit(int skyrmion, const ResistancePair& rp);

// One multi-level cell: two stored bits (A, B) and two compute contacts (O1, O2).
struct BitCell {
    std::array<std::uint8_t, 4> skyrmion{0, 0, 0, 0};

    std::uint8_t& at(Region r) { return skyrmion[static_cast<int>(r)]; }
    std::uint8_t at(Region r) const { return skyrmion[static_cast<int>(r)]; }
};

// Control-line voltages and timing for one bit-cell operation.
struct OperationSchedule {
    OpKind op_kind = OpKind::Read;
    double csl1_v = 0.0;
    double csl2_v = 0.0;
    double csl3_v = 0.0;
    std::array<std::uint8_t, 4> rsl_on{0, 0, 0, 0};  // RSL1..RSL4
    double duration_ns = 0.0;
    double relaxation_ns = 0.0;
};

struct ArrayTimings {
    double write_drive_ns = 2.0;
    double relaxation_ns = 0.5;
    double and_drive_ns = 2.5;
    double or_drive_ns = 5.0;
    double read_ns = 1.0;
    double reset_ns = 2.0;          // t_A; the paper labels but never quantifies it
    bool reset_calibrated = false;  // stays false until a measured value exists
};

struct ArrayVoltages {
    double write_v = 0.81;
    double compute_v = 0.79;
    double read_v = 0.25;
    double read_disturb_threshold_v = 0.5;

    void validate() const;
};

struct ArrayConfig {
    int rows = 64;
    int cols = 64;
    ResistancePair resistance;
    ArrayVoltages voltages;
    ArrayTimings timings;

    void validate() const;
    int cells() const { return rows * cols; }
    // 2 stored data bits per cell.
    int capacity_bytes() const { return rows * cols * 2 / 8; }
};

struct WriteResult {
    double elapsed_ns = 0.0;
};

struct PhaseTiming {
    Region target = Region::O1;
    int result_bit = 0;
    double drive_ns = 0.0;
    double relaxation_ns = 0.0;
};

struct ComputeResult {
    int bit = 0;
    Region output = Region::O1;
    int phase_count = 0;
    std::array<PhaseTiming, 2> phases{};
    double elapsed_ns = 0.0;
};

// Table-driven electrical stimuli for each operation kind. Reads address the
// target region's own select line.
OperationSchedule schedule_for(OpKind kind, const ArrayConfig& cfg,
                               Region target = Region::A);

// The SIMC unit: a grid of bit-cells over one shared heavy-metal film.
// Reset is therefore global. Operations on one array are serialized by
// construction; distinct arrays are independent.
class SimcArray {
public:
    SimcArray(const ArrayConfig& cfg, const device::DeviceModel& model);

    const ArrayConfig& config() const { return cfg_; }
    const device::DeviceModel& model() const { return model_; }

    BitCell& cell(int row, int col);
    const BitCell& cell(int row, int col) const;

    // Nucleates (value=1) or leaves alone (value=0) the stored bit. A stored
    // 1 cannot be overwritten with 0 without a prior global reset.
    WriteResult write_bit(int row, int col, Region region, int value);

    // Runs the gate protocol on the cell's stored inputs. Outputs must be
    // clean; every phase decision comes from the device model.
    ComputeResult compute(int row, int col, Gate gate);

    // Threshold read of one region's MTJ. Non-destructive.
    int read(int row, int col, Region region, double read_voltage_v) const;
    int read(int row, int col, Region region) const;

    double region_resistance(int row, int col, Region region) const;

    // Annihilates every skyrmion on the shared film.
    double reset();

private:
    void check_addr(int row, int col) const;

    ArrayConfig cfg_;
    device::DeviceModel model_;
    std::vector<BitCell> cells_;
};

}  // namespace simba::simc

#endif  // SIMBA_SIMC_ARRAY_HPP
