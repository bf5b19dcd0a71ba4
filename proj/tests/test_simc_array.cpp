#include <doctest.h>

#include "simba/simc_array.hpp"

using namespace simba;
using namespace simba::simc;

namespace {

SimcArray make_array() { return SimcArray(ArrayConfig{}, device::DeviceModel{}); }

int truth(Gate g, int a, int b) {
    switch (g) {
        case Gate::And: return a & b;
        case Gate::Or: return a | b;
        case Gate::Xor: return a ^ b;
    }
    return -1;
}

}  // namespace

TEST_CASE("resistance model endpoints and midpoint") {
    const ResistancePair rp{1000.0, 3000.0};
    CHECK(resistance_model(1.0, rp) == 1000.0);    // parallel
    CHECK(resistance_model(-1.0, rp) == 3000.0);   // anti-parallel
    CHECK(resistance_model(0.0, rp) == doctest::Approx(2000.0).epsilon(1e-12));
    CHECK(resistance_for_bit(0, rp) == 1000.0);
    CHECK(resistance_for_bit(1, rp) == 3000.0);
    CHECK_THROWS_AS(resistance_model(1.5, rp), OutOfRange);
}

TEST_CASE("write timing: 2.5 ns for a one, no device time for a zero") {
    SimcArray array = make_array();
    const WriteResult w1 = array.write_bit(0, 0, Region::A, 1);
    CHECK(w1.elapsed_ns == doctest::Approx(2.5));
    const WriteResult w0 = array.write_bit(0, 0, Region::B, 0);
    CHECK(w0.elapsed_ns == 0.0);
    CHECK(array.cell(0, 0).at(Region::A) == 1);
    CHECK(array.cell(0, 0).at(Region::B) == 0);
}

TEST_CASE("overwriting a stored one requires reset") {
    SimcArray array = make_array();
    array.write_bit(0, 0, Region::A, 1);
    CHECK_THROWS_AS(array.write_bit(0, 0, Region::A, 0), WriteWithoutReset);
    array.reset();
    CHECK_NOTHROW(array.write_bit(0, 0, Region::A, 0));
}

TEST_CASE("round-trip: write then read returns the stored pair") {
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            SimcArray array = make_array();
            array.write_bit(0, 0, Region::A, a);
            array.write_bit(0, 0, Region::B, b);
            CHECK(array.read(0, 0, Region::A) == a);
            CHECK(array.read(0, 0, Region::B) == b);
        }
}

TEST_CASE("gate correctness: all twelve cases come out of the device model") {
    for (Gate g : {Gate::And, Gate::Or, Gate::Xor})
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                SimcArray array = make_array();
                array.write_bit(0, 0, Region::A, a);
                array.write_bit(0, 0, Region::B, b);
                const ComputeResult res = array.compute(0, 0, g);
                CAPTURE(to_string(g));
                CAPTURE(a);
                CAPTURE(b);
                CHECK(res.bit == truth(g, a, b));
                CHECK(array.read(0, 0, res.output) == res.bit);
            }
}

TEST_CASE("two-phase xor equals (A or B) and not (A and B)") {
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            SimcArray array = make_array();
            array.write_bit(0, 0, Region::A, a);
            array.write_bit(0, 0, Region::B, b);
            const ComputeResult res = array.compute(0, 0, Gate::Xor);
            CHECK(res.bit == ((a | b) & (1 - (a & b))));
            // Phase 1 left the AND result at O1.
            CHECK(array.cell(0, 0).at(Region::O1) == (a & b));
        }
}

TEST_CASE("compute timings match the electrical measurements") {
    SimcArray array = make_array();
    array.write_bit(0, 0, Region::A, 1);
    array.write_bit(0, 0, Region::B, 1);
    const ComputeResult and_res = array.compute(0, 0, Gate::And);
    CHECK(and_res.elapsed_ns == doctest::Approx(3.0));  // 2.5 + 0.5
    array.reset();

    array.write_bit(0, 0, Region::A, 1);
    const ComputeResult or_res = array.compute(0, 0, Gate::Or);
    CHECK(or_res.elapsed_ns == doctest::Approx(5.5));  // 5.0 + 0.5
    array.reset();

    array.write_bit(0, 0, Region::A, 1);
    array.write_bit(0, 0, Region::B, 1);
    const ComputeResult xor_res = array.compute(0, 0, Gate::Xor);
    CHECK(xor_res.elapsed_ns == doctest::Approx(8.5));  // 3.0 + 5.5
    CHECK(xor_res.phase_count == 2);
    CHECK(xor_res.phases[0].drive_ns == doctest::Approx(2.5));
    CHECK(xor_res.phases[1].drive_ns == doctest::Approx(5.0));
}

TEST_CASE("recompute without reset raises DirtyOutputs") {
    SimcArray array = make_array();
    array.write_bit(0, 0, Region::A, 1);
    array.write_bit(0, 0, Region::B, 1);
    array.compute(0, 0, Gate::And);
    CHECK_THROWS_AS(array.compute(0, 0, Gate::Or), DirtyOutputs);
    array.reset();
    CHECK_NOTHROW(array.compute(0, 0, Gate::Or));  // inputs were annihilated too
}

TEST_CASE("reset annihilates every skyrmion on the shared film") {
    SimcArray array = make_array();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            array.write_bit(r, c, Region::A, 1);
            array.write_bit(r, c, Region::B, 1);
        }
    array.compute(0, 0, Gate::And);
    const double t = array.reset();
    CHECK(t == doctest::Approx(2.0));
    for (int r = 0; r < array.config().rows; ++r)
        for (int c = 0; c < array.config().cols; ++c)
            for (Region reg : {Region::A, Region::B, Region::O1, Region::O2})
                CHECK(array.read(r, c, reg) == 0);
}

TEST_CASE("reset is idempotent on an empty array") {
    SimcArray array = make_array();
    array.reset();
    array.reset();
    CHECK(array.read(0, 0, Region::A) == 0);
}

TEST_CASE("reads above the disturb threshold are refused") {
    SimcArray array = make_array();
    array.write_bit(0, 0, Region::A, 1);
    CHECK(array.read(0, 0, Region::A, 0.25) == 1);
    CHECK_THROWS_AS(array.read(0, 0, Region::A, 0.9), ReadDisturbRisk);
}

TEST_CASE("schedules energize exactly the documented lines") {
    const ArrayConfig cfg;
    const OperationSchedule wa = schedule_for(OpKind::WriteA, cfg);
    CHECK(wa.csl2_v == doctest::Approx(0.81));
    CHECK(wa.csl3_v == 0.0);
    CHECK(wa.rsl_on == std::array<std::uint8_t, 4>{1, 0, 0, 0});

    const OperationSchedule c1 = schedule_for(OpKind::ComputeO1, cfg);
    CHECK(c1.csl3_v == doctest::Approx(0.79));
    CHECK(c1.csl2_v == 0.0);
    CHECK(c1.rsl_on == std::array<std::uint8_t, 4>{0, 0, 1, 0});

    const OperationSchedule rd = schedule_for(OpKind::Read, cfg, Region::O2);
    CHECK(rd.csl3_v == doctest::Approx(0.25));
    CHECK(rd.rsl_on == std::array<std::uint8_t, 4>{0, 0, 0, 1});

    const OperationSchedule rd_a = schedule_for(OpKind::Read, cfg, Region::A);
    CHECK(rd_a.csl2_v == doctest::Approx(0.25));

    const OperationSchedule rs = schedule_for(OpKind::Reset, cfg);
    CHECK(rs.csl1_v == 0.0);
    CHECK(rs.csl2_v == 0.0);
    CHECK(rs.csl3_v == 0.0);
    CHECK(rs.duration_ns == doctest::Approx(2.0));
}

TEST_CASE("schedule voltages classify into the intended drive windows") {
    const ArrayConfig cfg;
    const device::DeviceModel model;
    const auto write_cls = device::classify_phase_window(
        {schedule_for(OpKind::WriteA, cfg).csl2_v, cfg.timings.write_drive_ns}, model.windows);
    CHECK(write_cls.window == device::PhaseWindow::Nucleate);
    const auto compute_cls = device::classify_phase_window(
        {schedule_for(OpKind::ComputeO1, cfg).csl3_v, cfg.timings.and_drive_ns}, model.windows);
    CHECK(compute_cls.window == device::PhaseWindow::Oscillate);
}

TEST_CASE("capacity invariant: 64x64 cells store 1 KB") {
    const ArrayConfig cfg;
    CHECK(cfg.cells() == 4096);
    CHECK(cfg.capacity_bytes() == 1024);
}
