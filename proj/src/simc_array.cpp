#include "simba/simc_array.hpp"

#include <string>

namespace simba::simc {

const char* to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::O1: return "O1";
        case Region::O2: return "O2";
    }
    return "?";
}

const char* to_string(Gate g) {
    switch (g) {
        case Gate::And: return "and";
        case Gate::Or: return "or";
        case Gate::Xor: return "xor";
    }
    return "?";
}

const char* to_string(OpKind k) {
    switch (k) {
        case OpKind::WriteA: return "WriteA";
        case OpKind::WriteB: return "WriteB";
        case OpKind::ComputeO1: return "ComputeO1";
        case OpKind::ComputeO2: return "ComputeO2";
        case OpKind::Read: return "Read";
        case OpKind::Reset: return "Reset";
    }
    return "?";
}

void ResistancePair::validate() const {
    if (!(0.0 < r_parallel_ohm && r_parallel_ohm < r_antiparallel_ohm))
        throw ConfigError("resistance: need 0 < R_P < R_AP");
}

void ArrayVoltages::validate() const {
    if (write_v <= 0.0 || compute_v <= 0.0 || read_v <= 0.0)
        throw ConfigError("voltages: drive voltages must be > 0");
    if (read_disturb_threshold_v <= 0.0)
        throw ConfigError("voltages: read_disturb_threshold must be > 0");
}

void ArrayConfig::validate() const {
    if (rows <= 0 || cols <= 0) throw ConfigError("array: rows/cols must be > 0");
    if ((rows * cols * 2) % 8 != 0)
        throw ConfigError("array: data bits must pack into whole bytes");
    resistance.validate();
    voltages.validate();
    if (timings.write_drive_ns <= 0.0 || timings.and_drive_ns <= 0.0 ||
        timings.or_drive_ns <= 0.0 || timings.read_ns <= 0.0 || timings.reset_ns <= 0.0 ||
        timings.relaxation_ns < 0.0)
        throw ConfigError("array: timings must be positive (relaxation >= 0)");
}

double resistance_model(double alignment, const ResistancePair& rp) {
    if (alignment < -1.0 || alignment > 1.0)
        throw OutOfRange("resistance_model: alignment outside [-1,1]");
    rp.validate();
    return rp.r_parallel_ohm + (rp.r_antiparallel_ohm - rp.r_parallel_ohm) * (1.0 - alignment) / 2.0;
}

double resistance_for_bit(int skyrmion, const ResistancePair& rp) {
    return resistance_model(skyrmion ? -1.0 : 1.0, rp);
}

OperationSchedule schedule_for(OpKind kind, const ArrayConfig& cfg, Region target) {
    OperationSchedule s;
    s.op_kind = kind;
    const ArrayTimings& t = cfg.timings;
    switch (kind) {
        case OpKind::WriteA:
            s.csl2_v = cfg.voltages.write_v;
            s.rsl_on = {1, 0, 0, 0};
            s.duration_ns = t.write_drive_ns;
            s.relaxation_ns = t.relaxation_ns;
            break;
        case OpKind::WriteB:
            s.csl2_v = cfg.voltages.write_v;
            s.rsl_on = {0, 1, 0, 0};
            s.duration_ns = t.write_drive_ns;
            s.relaxation_ns = t.relaxation_ns;
            break;
        case OpKind::ComputeO1:
            s.csl3_v = cfg.voltages.compute_v;
            s.rsl_on = {0, 0, 1, 0};
            s.duration_ns = t.and_drive_ns;
            s.relaxation_ns = t.relaxation_ns;
            break;
        case OpKind::ComputeO2:
            s.csl3_v = cfg.voltages.compute_v;
            s.rsl_on = {0, 0, 0, 1};
            s.duration_ns = t.or_drive_ns;
            s.relaxation_ns = t.relaxation_ns;
            break;
        case OpKind::Read:
            // Stored bits sense through CSL2, compute contacts through CSL3.
            if (target == Region::A || target == Region::B)
                s.csl2_v = cfg.voltages.read_v;
            else
                s.csl3_v = cfg.voltages.read_v;
            s.rsl_on[static_cast<int>(target)] = 1;
            s.duration_ns = t.read_ns;
            s.relaxation_ns = 0.0;
            break;
        case OpKind::Reset:
            // In-plane current through the shared HM film; no CSL involved.
            s.duration_ns = t.reset_ns;
            s.relaxation_ns = 0.0;
            break;
    }
    return s;
}

SimcArray::SimcArray(const ArrayConfig& cfg, const device::DeviceModel& model)
    : cfg_(cfg), model_(model) {
    cfg_.validate();
    model_.validate();
    cells_.resize(static_cast<std::size_t>(cfg_.rows) * cfg_.cols);
}

void SimcArray::check_addr(int row, int col) const {
    if (row < 0 || row >= cfg_.rows || col < 0 || col >= cfg_.cols)
        throw OutOfRange("cell address (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside " + std::to_string(cfg_.rows) + "x" + std::to_string(cfg_.cols));
}

BitCell& SimcArray::cell(int row, int col) {
    check_addr(row, col);
    return cells_[static_cast<std::size_t>(row) * cfg_.cols + col];
}

const BitCell& SimcArray::cell(int row, int col) const {
    check_addr(row, col);
    return cells_[static_cast<std::size_t>(row) * cfg_.cols + col];
}

WriteResult SimcArray::write_bit(int row, int col, Region region, int value) {
    if (region != Region::A && region != Region::B)
        throw ConfigError("write_bit: only regions A and B store data");
    BitCell& c = cell(row, col);
    if (value == 0) {
        if (c.at(region) != 0)
            throw WriteWithoutReset("write_bit: 1 -> 0 requires a global reset first");
        return {0.0};  // access switch stays off, no current
    }
    c.at(region) = 1;
    return {cfg_.timings.write_drive_ns + cfg_.timings.relaxation_ns};
}

ComputeResult SimcArray::compute(int row, int col, Gate gate) {
    BitCell& c = cell(row, col);
    if (c.at(Region::O1) != 0 || c.at(Region::O2) != 0)
        throw DirtyOutputs("compute: O1/O2 hold a previous result; reset required");

    const int a = c.at(Region::A);
    const int b = c.at(Region::B);
    const ArrayTimings& t = cfg_.timings;
    const double v = cfg_.voltages.compute_v;

    ComputeResult res;
    auto run_phase = [&](Region target, double drive_ns) {
        const int prior = (target == Region::O1) ? c.at(Region::O2) : c.at(Region::O1);
        const int bit = model_.stno_outcome(a, b, prior, {v, drive_ns});
        c.at(target) = static_cast<std::uint8_t>(bit);
        res.phases[res.phase_count++] = {target, bit, drive_ns, t.relaxation_ns};
        res.elapsed_ns += drive_ns + t.relaxation_ns;
        return bit;
    };

    switch (gate) {
        case Gate::And:
            res.bit = run_phase(Region::O1, t.and_drive_ns);
            res.output = Region::O1;
            break;
        case Gate::Or:
            res.bit = run_phase(Region::O2, t.or_drive_ns);
            res.output = Region::O2;
            break;
        case Gate::Xor:
            run_phase(Region::O1, t.and_drive_ns);   // phase 1: A.B
            res.bit = run_phase(Region::O2, t.or_drive_ns);  // phase 2: suppressed by O1
            res.output = Region::O2;
            break;
    }
    return res;
}

int SimcArray::read(int row, int col, Region region, double read_voltage_v) const {
    if (read_voltage_v > cfg_.voltages.read_disturb_threshold_v)
        throw ReadDisturbRisk("read: voltage above disturb-safe threshold");
    const BitCell& c = cell(row, col);
    const double r = resistance_for_bit(c.at(region), cfg_.resistance);
    const double midpoint =
        (cfg_.resistance.r_parallel_ohm + cfg_.resistance.r_antiparallel_ohm) / 2.0;
    return r > midpoint ? 1 : 0;
}

int SimcArray::read(int row, int col, Region region) const {
    return read(row, col, region, cfg_.voltages.read_v);
}

double SimcArray::region_resistance(int row, int col, Region region) const {
    return resistance_for_bit(cell(row, col).at(region), cfg_.resistance);
}

double SimcArray::reset() {
    for (BitCell& c : cells_) c.skyrmion = {0, 0, 0, 0};
    return cfg_.timings.reset_ns;
}

}  // namespace simba::simc
