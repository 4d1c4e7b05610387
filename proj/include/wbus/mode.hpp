#ifndef WBUS_MODE_HPP
#define WBUS_MODE_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "wbus/errors.hpp"

namespace wbus {

// All quantities are SI throughout the library: lengths in m, times in s,
// rates in rad/s. Unit conversion happens only at the CLI boundary.

namespace defaults {
inline constexpr double omega0 = 2.0 * std::numbers::pi * 14.8e6; // rad/s
inline constexpr double waist = 10e-6;                            // m
inline constexpr double wavelength = 866e-9;                      // m
inline constexpr double velocity = 800.0;                         // m/s
inline constexpr double pitch = 20e-6;                            // m
inline constexpr double z_plane = 0.0;                            // m
inline constexpr double delta_v = 0.5;                            // m/s
inline constexpr double delta_y = 50e-9;                          // m
inline constexpr double delta_z = 50e-9;                          // m
inline constexpr double gamma_atom = 2.0 * std::numbers::pi * 1.69e6;   // rad/s
inline constexpr double kappa_cavity = 2.0 * std::numbers::pi * 102e3;  // rad/s
} // namespace defaults

namespace detail {
inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw invalid_argument_error(std::string(what) + " must be finite");
}
} // namespace detail

// TEM00 cavity mode: Gaussian transverse profile times an axial standing wave.
struct CavityMode {
    double omega0 = defaults::omega0; // peak vacuum Rabi coupling, rad/s
    double waist = defaults::waist;   // 1/e field radius, m
    double wavelength = defaults::wavelength; // m

    void validate() const {
        detail::require_finite(omega0, "omega0");
        detail::require_finite(waist, "waist");
        detail::require_finite(wavelength, "wavelength");
        if (omega0 <= 0.0) throw invalid_argument_error("omega0 must be > 0");
        if (waist <= 0.0) throw invalid_argument_error("waist must be > 0");
        if (wavelength <= 0.0) throw invalid_argument_error("wavelength must be > 0");
    }
};

struct IonSite {
    int index = 1; // 1-based, order of encounter along the sweep
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Ions on a uniform string along x; consecutive x spacings must equal pitch.
struct IonArray {
    std::vector<IonSite> sites;
    double pitch = defaults::pitch;

    void validate() const {
        if (sites.empty()) throw invalid_argument_error("ion array must be nonempty");
        detail::require_finite(pitch, "pitch");
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const IonSite& s = sites[i];
            if (s.index != static_cast<int>(i) + 1)
                throw invalid_argument_error("ion indices must be 1,2,... in order");
            detail::require_finite(s.x, "ion x");
            detail::require_finite(s.y, "ion y");
            detail::require_finite(s.z, "ion z");
            if (i > 0 && std::abs(sites[i].x - sites[i - 1].x - pitch) > 1e-12)
                throw invalid_argument_error("ion spacing deviates from pitch");
        }
    }

    static IonArray uniform(std::span<const double> y, double pitch, double z = 0.0) {
        IonArray a;
        a.pitch = pitch;
        a.sites.reserve(y.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            a.sites.push_back(IonSite{static_cast<int>(i) + 1,
                                      static_cast<double>(i) * pitch, y[i], z});
        return a;
    }
};

// Cavity sweep at uniform velocity along +x. The effective interaction time
// per ion is derived, never stored.
struct SweepKinematics {
    double velocity = defaults::velocity; // m/s

    void validate() const {
        detail::require_finite(velocity, "velocity");
        if (velocity <= 0.0) throw invalid_argument_error("velocity must be > 0");
    }
};

// f(x,y,z) = exp(-(x^2+y^2)/w^2) cos(2 pi z / lambda), in [-1, 1].
inline double mode_profile(const CavityMode& mode, double x, double y, double z) {
    mode.validate();
    detail::require_finite(x, "x");
    detail::require_finite(y, "y");
    detail::require_finite(z, "z");
    const double w2 = mode.waist * mode.waist;
    return std::exp(-(x * x + y * y) / w2) *
           std::cos(2.0 * std::numbers::pi * z / mode.wavelength);
}

// Coupling seen by an ion as the mode axis passes it: Omega0 * f(0,y,z).
// Sign follows the standing-wave cosine; it is not clamped.
inline double coupling_strength(const CavityMode& mode, double y, double z) {
    return mode.omega0 * mode_profile(mode, 0.0, y, z);
}

// Constant-coupling time equivalent to one Gaussian transit: sqrt(pi) w / v.
inline double effective_duration(const CavityMode& mode, double velocity) {
    mode.validate();
    detail::require_finite(velocity, "velocity");
    if (velocity <= 0.0)
        throw invalid_argument_error("effective_duration: velocity must be > 0");
    return std::sqrt(std::numbers::pi) * mode.waist / velocity;
}

// Accumulated Rabi angle theta = Omega * t_eff. No range reduction.
inline double pulse_angle(double omega, double t_eff) {
    return omega * t_eff;
}

} // namespace wbus

#endif // WBUS_MODE_HPP
