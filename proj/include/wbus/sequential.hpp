#ifndef WBUS_SEQUENTIAL_HPP
#define WBUS_SEQUENTIAL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "wbus/errors.hpp"
#include "wbus/mode.hpp"

namespace wbus {

// Rabi angles theta_n = Omega_n * t_eff for the ions in sweep order.
// Angles are not range-reduced; values past pi/2 model overshoot.
struct PulseSchedule {
    std::vector<double> angles;

    std::size_t size() const { return angles.size(); }

    void validate() const {
        if (angles.empty()) throw invalid_argument_error("pulse schedule is empty");
        for (double a : angles) detail::require_finite(a, "pulse angle");
    }
};

// One-excitation sector of the ion string + cavity photon. photon_amplitude
// is the "photon still in the cavity" coefficient B, ion_amplitudes are the
// A_n for "ion n excited, photon absorbed".
struct SingleExcitationState {
    std::vector<std::complex<double>> ion_amplitudes;
    std::complex<double> photon_amplitude{1.0, 0.0};

    double norm_sq() const {
        double s = std::norm(photon_amplitude);
        for (const auto& a : ion_amplitudes) s += std::norm(a);
        return s;
    }
};

// Resonant transit of one ion: the photon amplitude rotates into the new
// ion's amplitude by theta. Ions already written are dark and stay put.
inline SingleExcitationState step_one_ion(SingleExcitationState state, double theta) {
    const std::complex<double> b = state.photon_amplitude;
    state.ion_amplitudes.push_back(std::complex<double>(0.0, -1.0) * b * std::sin(theta));
    state.photon_amplitude = b * std::cos(theta);
    return state;
}

// Full sweep from |g...g>|1>: fold of step_one_ion over the schedule.
inline SingleExcitationState evolve_sequential(const PulseSchedule& schedule) {
    schedule.validate();
    SingleExcitationState state;
    state.ion_amplitudes.reserve(schedule.size());
    for (double theta : schedule.angles) state = step_one_ion(std::move(state), theta);
    return state;
}

// Real amplitude magnitudes a_n = sin(theta_n) prod_{j<n} cos(theta_j);
// the common -i phase is dropped. Closed form of the recursion above.
inline std::vector<double> amplitude_factors(const PulseSchedule& schedule) {
    schedule.validate();
    std::vector<double> a;
    a.reserve(schedule.size());
    double still_photon = 1.0;
    for (double theta : schedule.angles) {
        a.push_back(std::sin(theta) * still_photon);
        still_photon *= std::cos(theta);
    }
    return a;
}

// Overlap fidelity F = sum_n a_n(ideal) * a_n(perturbed). The photon
// component is deliberately left out of the sum; both factor sets are real
// since the per-ion -i phases cancel pairwise.
inline double w_overlap_fidelity(const PulseSchedule& perturbed, const PulseSchedule& ideal) {
    if (perturbed.size() != ideal.size())
        throw invalid_argument_error("w_overlap_fidelity: schedule lengths differ");
    const std::vector<double> a = amplitude_factors(ideal);
    const std::vector<double> af = amplitude_factors(perturbed);
    double f = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) f += a[n] * af[n];
    return f;
}

inline std::complex<double> state_inner(const SingleExcitationState& a,
                                         const SingleExcitationState& b) {
    if (a.ion_amplitudes.size() != b.ion_amplitudes.size())
        throw invalid_argument_error("state_inner: state sizes differ");
    std::complex<double> ov = std::conj(a.photon_amplitude) * b.photon_amplitude;
    for (std::size_t n = 0; n < a.ion_amplitudes.size(); ++n)
        ov += std::conj(a.ion_amplitudes[n]) * b.ion_amplitudes[n];
    return ov;
}

inline double overlap_magnitude(const SingleExcitationState& a,
                                const SingleExcitationState& b) {
    return std::abs(state_inner(a, b));
}

// Diagnostic extension: true state overlap |<a|b>|^2 / (<a|a><b|b>), photon
// component included. Reported alongside the plain overlap fidelity, never
// substituted for it.
inline double state_overlap_fidelity(const SingleExcitationState& a,
                                     const SingleExcitationState& b) {
    return std::norm(state_inner(a, b)) / (a.norm_sq() * b.norm_sq());
}

// Position/velocity uncertainty magnitudes. Signs (worst-case mode) or
// sampled offsets (Monte-Carlo mode) are resolved by the caller.
struct NoiseSpec {
    double delta_v = defaults::delta_v; // m/s
    double delta_y = defaults::delta_y; // m
    double delta_z = defaults::delta_z; // m

    void validate() const {
        detail::require_finite(delta_v, "delta_v");
        detail::require_finite(delta_y, "delta_y");
        detail::require_finite(delta_z, "delta_z");
        if (delta_v < 0 || delta_y < 0 || delta_z < 0)
            throw invalid_argument_error("noise deltas must be >= 0");
    }
};

// One global sign per parameter, applied to every ion in a run.
struct SignTriple {
    int sv = +1;
    int sy = +1;
    int sz = +1;
};

// Concrete additive offsets: dv is global (one cavity, one velocity),
// dy/dz are per ion.
struct NoiseOffsets {
    double dv = 0.0;
    std::vector<double> dy;
    std::vector<double> dz;
};

inline NoiseOffsets resolve_worst_case(const NoiseSpec& noise, SignTriple sign,
                                       std::size_t n_ions) {
    noise.validate();
    NoiseOffsets off;
    off.dv = sign.sv * noise.delta_v;
    off.dy.assign(n_ions, sign.sy * noise.delta_y);
    off.dz.assign(n_ions, sign.sz * noise.delta_z);
    return off;
}

// Fluctuated Rabi angles
//   alpha_n = Omega0 sqrt(pi) w / (v + dv) * exp(-(y_n+dy_n)^2/w^2)
//                                          * cos(2 pi (z_n+dz_n) / lambda).
inline PulseSchedule perturbed_angles(const IonArray& array, const CavityMode& mode,
                                      const SweepKinematics& kin,
                                      const NoiseOffsets& offsets) {
    array.validate();
    mode.validate();
    kin.validate();
    if (offsets.dy.size() != array.sites.size() || offsets.dz.size() != array.sites.size())
        throw invalid_argument_error("perturbed_angles: offset lists must match ion count");
    const double v_eff = kin.velocity + offsets.dv;
    if (v_eff <= 0.0)
        throw invalid_argument_error("perturbed_angles: effective velocity <= 0");
    const double t_eff = effective_duration(mode, v_eff);
    PulseSchedule out;
    out.angles.reserve(array.sites.size());
    for (std::size_t n = 0; n < array.sites.size(); ++n) {
        const IonSite& s = array.sites[n];
        const double omega =
            coupling_strength(mode, s.y + offsets.dy[n], s.z + offsets.dz[n]);
        out.angles.push_back(pulse_angle(omega, t_eff));
    }
    return out;
}

// Unperturbed schedule for an ion layout.
inline PulseSchedule schedule_for_array(const IonArray& array, const CavityMode& mode,
                                        const SweepKinematics& kin) {
    NoiseOffsets zero;
    zero.dy.assign(array.sites.size(), 0.0);
    zero.dz.assign(array.sites.size(), 0.0);
    return perturbed_angles(array, mode, kin, zero);
}

} // namespace wbus

#endif // WBUS_SEQUENTIAL_HPP
