#ifndef SIMBA_DEVICE_MODEL_HPP
#define SIMBA_DEVICE_MODEL_HPP

#include <string>

#include "simba/errors.hpp"

namespace simba::device {

// Film/material parameters. The reduced-order model consumes the wavelength
// and skyrmion radius directly; the magnetic constants are carried for
// reporting and the sensitivity sweeps.
struct MaterialParams {
    double saturation_magnetization_a_per_m = 580e3;
    double anisotropy_density_j_per_m3 = 0.8e6;
    double damping_ratio = 0.3;          // dimensionless, (0,1)
    double wavelength_nm = 100.0;        // lambda
    double skyrmion_radius_nm = 15.0;    // R

    void validate() const;
};

// Wave-equation constants. The amplitudes and fitting constants have no
// published values; defaults are config-supplied and flagged uncalibrated.
struct WaveParams {
    double amplitude_emitted = 1.0;     // A1
    double amplitude_scattered = 0.8;   // B1
    double wave_vector_per_nm = 0.0;    // k = 2*pi/lambda
    double angular_frequency_rad_per_ns = 62.83185307179586;  // omega
    double decay_fit_per_nm = 1.0;      // k_f
    double phase_fit_rad = 3.141592653589793;  // Phi_f
    bool calibrated = false;

    static WaveParams from_wavelength(double wavelength_nm, double a1, double b1,
                                      double omega, double k_f, double phi_f);
    void validate() const;
};

// STNO placement. Inputs A/B sit at `dist_input_to_output_nm` from each
// output contact; the two output contacts are `dist_output_to_output_nm`
// apart. Both distances must land on the lambda + n*lambda/4 grid.
struct GateGeometry {
    double dist_input_to_output_nm = 150.0;
    double dist_output_to_output_nm = 125.0;

    void validate(double wavelength_nm) const;
};

struct PulseSpec {
    double voltage_v = 0.0;
    double width_ns = 0.0;

    void validate() const;
};

enum class PhaseWindow { Attenuate, Oscillate, Nucleate };

enum class Interference { Constructive, Destructive, Neutral };

const char* to_string(PhaseWindow w);
const char* to_string(Interference i);

// Voltage boundaries of the three magnetization regimes. The two gaps the
// measurements leave open resolve to the nearest boundary.
struct PhaseWindowBounds {
    double attenuate_below_v = 0.78;
    double oscillate_low_v = 0.788;
    double oscillate_high_v = 0.79;
    double nucleate_above_v = 0.8;

    void validate() const;
};

struct PhaseWindowResult {
    PhaseWindow window = PhaseWindow::Attenuate;
    bool in_gap = false;  // voltage fell between windows; nearest boundary used
};

// Pulse widths that nucleate an output skyrmion during compute drive:
// two constructive sources need `fast_width_ns`, a single pure source
// needs `slow_width_ns`.
struct NucleationWidths {
    double fast_width_ns = 2.5;
    double slow_width_ns = 5.0;
};

// --- wave equations (analytically exact; used for inspection/plotting) ---

// Emitted spin wave amplitude at distance x (nm) and time t (ns).
double emitted_wave(const WaveParams& wp, double x_nm, double t_ns);

// Backscattered wave; `phase_rad` is the round-trip phase difference.
double scattered_wave(const WaveParams& wp, double x_nm, double t_ns, double phase_rad);

// Superposition of emitted and scattered components.
double total_wave(const WaveParams& wp, double x_nm, double t_ns, double phase_rad);

// Round-trip phase difference 2*k*(d - R).
double phase_difference(double wave_vector_per_nm, double d_nm, double skyrmion_radius_nm);

// --- logic-level classification ---

// Parity rule: d = lambda + n*lambda/4 within lambda/8 tolerance; even n is
// constructive, odd n destructive, anything off the grid neutral.
Interference classify_interference(double d_nm, double wavelength_nm);

PhaseWindowResult classify_phase_window(const PulseSpec& pulse, const PhaseWindowBounds& bounds);

// Nucleation decision for one STNO activation during compute drive.
//
// Every stored input at a constructive distance contributes one drive unit;
// a skyrmion already sitting at the destructively placed neighbour output
// removes one unit and, more importantly, breaks the phase coherence that a
// lone source needs for slow nucleation. Two units nucleate within
// `fast_width_ns`; a single *unscattered* unit needs `slow_width_ns`.
struct DeviceModel {
    MaterialParams material;
    GateGeometry geometry;
    PhaseWindowBounds windows;
    NucleationWidths widths;

    void validate() const;

    int stno_outcome(int input_a, int input_b, int prior_output_skyrmion,
                     const PulseSpec& pulse) const;
};

}  // namespace simba::device

#endif  // SIMBA_DEVICE_MODEL_HPP
