#include <doctest.h>

#include <cmath>

#include "simba/device_model.hpp"

using namespace simba;
using namespace simba::device;

namespace {

WaveParams test_wave() {
    // lambda = 100 nm, A1 = 1, B1 = 0.8, omega = 20*pi rad/ns, k_f = 1 /nm,
    // Phi_f = pi rad. Matches config/simba.json defaults.
    return WaveParams::from_wavelength(100.0, 1.0, 0.8, 62.83185307179586, 1.0,
                                       3.141592653589793);
}

DeviceModel test_model() {
    DeviceModel m;  // defaults mirror the shipped config
    return m;
}

}  // namespace

TEST_CASE("wave vector comes from the wavelength exactly") {
    const WaveParams wp = test_wave();
    CHECK(wp.wave_vector_per_nm == doctest::Approx(2.0 * M_PI / 100.0).epsilon(1e-15));
}

TEST_CASE("emitted wave at the origin is the bare amplitude") {
    WaveParams wp = test_wave();
    CHECK(emitted_wave(wp, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    wp.amplitude_emitted = 0.0;
    CHECK(emitted_wave(wp, 50.0, 1.0) == 0.0);
}

TEST_CASE("emitted wave matches the independent scalar evaluation") {
    const WaveParams wp = test_wave();
    // Frozen from a separate straight-line evaluation of the emitted-wave
    // expression at these arguments.
    CHECK(emitted_wave(wp, 50.0, 0.0) ==
          doctest::Approx(-23.140692632779277).epsilon(1e-12));
    CHECK(emitted_wave(wp, 37.5, 0.01) ==
          doctest::Approx(-0.8805204279073672).epsilon(1e-12));
}

TEST_CASE("scattered wave zero amplitude and frozen value") {
    WaveParams wp = test_wave();
    const double phase = phase_difference(wp.wave_vector_per_nm, 125.0, 15.0);
    CHECK(phase == doctest::Approx(13.823007675795091).epsilon(1e-15));  // 4.4*pi
    CHECK(phase == doctest::Approx(4.4 * M_PI).epsilon(1e-15));
    CHECK(scattered_wave(wp, 20.0, 0.005, phase) ==
          doctest::Approx(0.21635222130981469).epsilon(1e-12));
    wp.amplitude_scattered = 0.0;
    CHECK(scattered_wave(wp, 20.0, 0.005, phase) == 0.0);
}

TEST_CASE("scattered wave reduces to the emitted wave at zero phase") {
    WaveParams wp = test_wave();
    wp.amplitude_scattered = wp.amplitude_emitted;
    wp.phase_fit_rad = 1e12;
    for (double x : {0.0, 10.0, 42.0}) {
        for (double t : {0.0, 0.01, 0.2}) {
            CHECK(scattered_wave(wp, x, t, 0.0) ==
                  doctest::Approx(emitted_wave(wp, x, t)).epsilon(1e-9));
        }
    }
}

TEST_CASE("superposition with zero scattering is the emitted wave exactly") {
    WaveParams wp = test_wave();
    wp.amplitude_scattered = 0.0;
    for (double x = 0.0; x <= 200.0; x += 7.0)
        CHECK(total_wave(wp, x, 0.05, 2.0) == emitted_wave(wp, x, 0.05));
}

TEST_CASE("interference parity: paper anchor distances") {
    CHECK(classify_interference(100.0, 100.0) == Interference::Constructive);  // n = 0
    CHECK(classify_interference(125.0, 100.0) == Interference::Destructive);   // n = 1
    CHECK(classify_interference(150.0, 100.0) == Interference::Constructive);  // n = 2
}

TEST_CASE("interference parity holds exhaustively on the grid") {
    for (double lambda : {80.0, 100.0, 120.0}) {
        for (int n = 0; n <= 8; ++n) {
            const double d = lambda + n * lambda / 4.0;
            const Interference expected =
                (n % 2 == 0) ? Interference::Constructive : Interference::Destructive;
            CAPTURE(lambda);
            CAPTURE(n);
            CHECK(classify_interference(d, lambda) == expected);
        }
    }
}

TEST_CASE("interference is neutral off the grid") {
    CHECK(classify_interference(50.0, 100.0) == Interference::Neutral);   // below lambda
    CHECK(classify_interference(87.0, 100.0) == Interference::Neutral);   // just under tolerance
    CHECK(classify_interference(88.0, 100.0) == Interference::Constructive);  // within lambda/8
}

TEST_CASE("phase window classification follows the measured voltages") {
    const PhaseWindowBounds bounds;
    CHECK(classify_phase_window({0.75, 4.0}, bounds).window == PhaseWindow::Attenuate);
    CHECK(classify_phase_window({0.789, 6.0}, bounds).window == PhaseWindow::Oscillate);
    CHECK(classify_phase_window({0.81, 2.5}, bounds).window == PhaseWindow::Nucleate);
    CHECK_FALSE(classify_phase_window({0.789, 6.0}, bounds).in_gap);
}

TEST_CASE("phase window gaps resolve to the nearest boundary and are flagged") {
    const PhaseWindowBounds bounds;
    const PhaseWindowResult low_gap = classify_phase_window({0.781, 4.0}, bounds);
    CHECK(low_gap.window == PhaseWindow::Attenuate);
    CHECK(low_gap.in_gap);
    const PhaseWindowResult low_gap_hi = classify_phase_window({0.787, 4.0}, bounds);
    CHECK(low_gap_hi.window == PhaseWindow::Oscillate);
    CHECK(low_gap_hi.in_gap);
    const PhaseWindowResult high_gap = classify_phase_window({0.792, 4.0}, bounds);
    CHECK(high_gap.window == PhaseWindow::Oscillate);
    CHECK(high_gap.in_gap);
    const PhaseWindowResult high_gap_hi = classify_phase_window({0.799, 4.0}, bounds);
    CHECK(high_gap_hi.window == PhaseWindow::Nucleate);
    CHECK(high_gap_hi.in_gap);
}

TEST_CASE("negative voltage is rejected") {
    CHECK_THROWS_AS(classify_phase_window({-0.1, 4.0}, PhaseWindowBounds{}), ConfigError);
}

TEST_CASE("stno outcome reproduces the documented nucleation cases") {
    const DeviceModel m = test_model();
    const double v = 0.79;
    CHECK(m.stno_outcome(1, 1, 0, {v, 2.5}) == 1);  // both inputs, fast
    CHECK(m.stno_outcome(1, 0, 0, {v, 5.0}) == 1);  // single input needs 5 ns
    CHECK(m.stno_outcome(1, 0, 0, {v, 2.5}) == 0);  // single input, too short
    CHECK(m.stno_outcome(1, 1, 1, {v, 5.0}) == 0);  // destructive prior suppresses
    CHECK(m.stno_outcome(0, 0, 0, {v, 5.0}) == 0);  // nothing to scatter
}

TEST_CASE("stno outcome rejects a write-class pulse in compute mode") {
    const DeviceModel m = test_model();
    CHECK_THROWS_AS(m.stno_outcome(1, 1, 0, {0.81, 2.5}), NucleatePulseInCompute);
}

TEST_CASE("attenuate-class drive never nucleates") {
    const DeviceModel m = test_model();
    CHECK(m.stno_outcome(1, 1, 0, {0.5, 50.0}) == 0);
}

TEST_CASE("nucleation is monotone in pulse width") {
    const DeviceModel m = test_model();
    const double v = 0.79;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int prior = 0; prior <= 1; ++prior)
                for (double w = 0.5; w <= 8.0; w += 0.5) {
                    if (m.stno_outcome(a, b, prior, {v, w}) == 1) {
                        for (double w2 = w; w2 <= 10.0; w2 += 0.5) {
                            CAPTURE(a);
                            CAPTURE(b);
                            CAPTURE(prior);
                            CHECK(m.stno_outcome(a, b, prior, {v, w2}) == 1);
                        }
                        break;
                    }
                }
}

TEST_CASE("material invariants are enforced") {
    MaterialParams mp;
    CHECK_NOTHROW(mp.validate());
    mp.damping_ratio = 1.0;
    CHECK_THROWS_AS(mp.validate(), ConfigError);
    mp = MaterialParams{};
    mp.wavelength_nm = 25.0;  // <= 2R
    CHECK_THROWS_AS(mp.validate(), ConfigError);
}

TEST_CASE("gate geometry must sit on the interference grid") {
    GateGeometry geom;
    CHECK_NOTHROW(geom.validate(100.0));
    geom.dist_input_to_output_nm = 70.0;
    CHECK_THROWS_AS(geom.validate(100.0), ConfigError);
}
