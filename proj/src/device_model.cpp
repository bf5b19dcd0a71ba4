#include "simba/device_model.hpp"

#include <cmath>

namespace simba::device {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void MaterialParams::validate() const {
    if (saturation_magnetization_a_per_m <= 0.0)
        throw ConfigError("material: saturation_magnetization must be > 0");
    if (anisotropy_density_j_per_m3 <= 0.0)
        throw ConfigError("material: anisotropy_density must be > 0");
    if (damping_ratio <= 0.0 || damping_ratio >= 1.0)
        throw ConfigError("material: damping_ratio must be in (0,1)");
    if (wavelength_nm <= 0.0)
        throw ConfigError("material: wavelength_nm must be > 0");
    if (skyrmion_radius_nm <= 0.0)
        throw ConfigError("material: skyrmion_radius_nm must be > 0");
    if (wavelength_nm <= 2.0 * skyrmion_radius_nm)
        throw ConfigError("material: wavelength_nm must exceed 2*skyrmion_radius_nm");
}

WaveParams WaveParams::from_wavelength(double wavelength_nm, double a1, double b1,
                                       double omega, double k_f, double phi_f) {
    WaveParams wp;
    wp.amplitude_emitted = a1;
    wp.amplitude_scattered = b1;
    wp.wave_vector_per_nm = kTwoPi / wavelength_nm;
    wp.angular_frequency_rad_per_ns = omega;
    wp.decay_fit_per_nm = k_f;
    wp.phase_fit_rad = phi_f;
    return wp;
}

void WaveParams::validate() const {
    if (amplitude_emitted < 0.0 || amplitude_scattered < 0.0)
        throw ConfigError("wave: amplitudes must be >= 0");
    if (wave_vector_per_nm <= 0.0)
        throw ConfigError("wave: wave_vector must be > 0 (set from wavelength)");
    if (decay_fit_per_nm <= 0.0)
        throw ConfigError("wave: decay_fit must be > 0");
    if (phase_fit_rad <= 0.0)
        throw ConfigError("wave: phase_fit must be > 0");
}

void GateGeometry::validate(double wavelength_nm) const {
    if (dist_input_to_output_nm <= 0.0 || dist_output_to_output_nm <= 0.0)
        throw ConfigError("geometry: distances must be > 0");
    if (classify_interference(dist_input_to_output_nm, wavelength_nm) == Interference::Neutral)
        throw ConfigError("geometry: input-to-output distance is off the lambda + n*lambda/4 grid");
    if (classify_interference(dist_output_to_output_nm, wavelength_nm) == Interference::Neutral)
        throw ConfigError("geometry: output-to-output distance is off the lambda + n*lambda/4 grid");
}

void PulseSpec::validate() const {
    if (voltage_v < 0.0) throw ConfigError("pulse: voltage must be >= 0");
    if (width_ns <= 0.0) throw ConfigError("pulse: width must be > 0");
}

void PhaseWindowBounds::validate() const {
    if (!(attenuate_below_v < oscillate_low_v && oscillate_low_v < oscillate_high_v &&
          oscillate_high_v < nucleate_above_v))
        throw ConfigError("phase windows: boundaries must be strictly ordered");
}

const char* to_string(PhaseWindow w) {
    switch (w) {
        case PhaseWindow::Attenuate: return "attenuate";
        case PhaseWindow::Oscillate: return "oscillate";
        case PhaseWindow::Nucleate: return "nucleate";
    }
    return "?";
}

const char* to_string(Interference i) {
    switch (i) {
        case Interference::Constructive: return "constructive";
        case Interference::Destructive: return "destructive";
        case Interference::Neutral: return "neutral";
    }
    return "?";
}

double emitted_wave(const WaveParams& wp, double x_nm, double t_ns) {
    const double k = wp.wave_vector_per_nm;
    const double w = wp.angular_frequency_rad_per_ns;
    const double arg = k * x_nm - w * t_ns;
    return wp.amplitude_emitted * std::exp((k / wp.decay_fit_per_nm) * x_nm - w * t_ns) * std::cos(arg);
}

double scattered_wave(const WaveParams& wp, double x_nm, double t_ns, double phase_rad) {
    const double k = wp.wave_vector_per_nm;
    const double w = wp.angular_frequency_rad_per_ns;
    const double envelope =
        (k / wp.decay_fit_per_nm) * x_nm - w * t_ns - phase_rad / (2.0 * wp.phase_fit_rad);
    return wp.amplitude_scattered * std::exp(envelope) * std::cos(k * x_nm - w * t_ns - phase_rad);
}

double total_wave(const WaveParams& wp, double x_nm, double t_ns, double phase_rad) {
    return emitted_wave(wp, x_nm, t_ns) + scattered_wave(wp, x_nm, t_ns, phase_rad);
}

double phase_difference(double wave_vector_per_nm, double d_nm, double skyrmion_radius_nm) {
    return 2.0 * wave_vector_per_nm * (d_nm - skyrmion_radius_nm);
}

Interference classify_interference(double d_nm, double wavelength_nm) {
    const double step = wavelength_nm / 4.0;
    const double tolerance = wavelength_nm / 8.0;  // half a grid step
    const double n_real = (d_nm - wavelength_nm) / step;
    const long long n = std::llround(n_real);
    if (n < 0) return Interference::Neutral;
    const double nearest = wavelength_nm + static_cast<double>(n) * step;
    if (std::abs(d_nm - nearest) > tolerance) return Interference::Neutral;
    return (n % 2 == 0) ? Interference::Constructive : Interference::Destructive;
}

PhaseWindowResult classify_phase_window(const PulseSpec& pulse, const PhaseWindowBounds& b) {
    if (pulse.voltage_v < 0.0) throw ConfigError("classify_phase_window: negative voltage");
    b.validate();
    const double v = pulse.voltage_v;
    if (v < b.attenuate_below_v) return {PhaseWindow::Attenuate, false};
    if (v >= b.oscillate_low_v && v <= b.oscillate_high_v) return {PhaseWindow::Oscillate, false};
    if (v > b.nucleate_above_v) return {PhaseWindow::Nucleate, false};
    // Unclassified gap; snap to the nearest boundary and flag it.
    if (v < b.oscillate_low_v) {
        const bool low = (v - b.attenuate_below_v) < (b.oscillate_low_v - v);
        return {low ? PhaseWindow::Attenuate : PhaseWindow::Oscillate, true};
    }
    const bool low = (v - b.oscillate_high_v) < (b.nucleate_above_v - v);
    return {low ? PhaseWindow::Oscillate : PhaseWindow::Nucleate, true};
}

void DeviceModel::validate() const {
    material.validate();
    geometry.validate(material.wavelength_nm);
    windows.validate();
    if (widths.fast_width_ns <= 0.0 || widths.slow_width_ns < widths.fast_width_ns)
        throw ConfigError("nucleation widths: need 0 < fast <= slow");
}

int DeviceModel::stno_outcome(int input_a, int input_b, int prior_output_skyrmion,
                              const PulseSpec& pulse) const {
    pulse.validate();
    const PhaseWindowResult cls = classify_phase_window(pulse, windows);
    if (cls.window == PhaseWindow::Nucleate)
        throw NucleatePulseInCompute(
            "stno_outcome: nucleate-class pulse in compute mode (schedule bug)");
    if (cls.window == PhaseWindow::Attenuate) return 0;  // oscillation dies out

    const double lambda = material.wavelength_nm;
    const Interference input_side = classify_interference(geometry.dist_input_to_output_nm, lambda);
    const Interference output_side =
        classify_interference(geometry.dist_output_to_output_nm, lambda);

    int drive = 0;
    if (input_side == Interference::Constructive) drive += (input_a != 0) + (input_b != 0);
    const bool scattered_by_prior =
        prior_output_skyrmion != 0 && output_side == Interference::Destructive;
    if (scattered_by_prior) drive -= 1;

    if (drive >= 2 && pulse.width_ns >= widths.fast_width_ns) return 1;
    if (drive == 1 && !scattered_by_prior && pulse.width_ns >= widths.slow_width_ns) return 1;
    return 0;
}

}  // namespace simba::device
