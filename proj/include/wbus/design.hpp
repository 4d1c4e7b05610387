#ifndef WBUS_DESIGN_HPP
#define WBUS_DESIGN_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "wbus/errors.hpp"
#include "wbus/mode.hpp"
#include "wbus/sequential.hpp"

namespace wbus {

struct DesignProblem {
    int n_ions = 10;
    CavityMode mode;
    double velocity = defaults::velocity;
    double z_plane = defaults::z_plane; // common z offset for all ions

    void validate() const {
        if (n_ions < 1) throw invalid_argument_error("n_ions must be >= 1");
        mode.validate();
        detail::require_finite(velocity, "velocity");
        if (velocity <= 0.0) throw invalid_argument_error("velocity must be > 0");
        detail::require_finite(z_plane, "z_plane");
    }
};

struct DesignSolution {
    PulseSchedule angles;            // theta_1..theta_N, rad
    std::vector<double> couplings;   // Omega_n, rad/s
    std::vector<double> positions;   // y_n, m (y >= 0 branch)
    std::vector<double> residuals;   // |theta(y_n) - theta_n|, rad
};

// Equal-amplitude target: theta_n = arcsin(1/sqrt(N-n+1)).
inline double required_angle_closed_form(int n_ions, int n) {
    if (n_ions < 1 || n < 1 || n > n_ions)
        throw invalid_argument_error("required_angle_closed_form: bad index");
    return std::asin(1.0 / std::sqrt(static_cast<double>(n_ions - n + 1)));
}

// Angle recursion: theta_1 = arcsin(1/sqrt(N)), theta_n = arcsin(tan(theta_{n-1})).
// tan(theta_{n-1}) = 1/sqrt(N-n+1) <= 1 exactly; the clamp only absorbs the
// last-step roundoff where the argument grazes 1.
inline PulseSchedule required_angles(int n_ions) {
    if (n_ions < 1) throw invalid_argument_error("required_angles: n_ions must be >= 1");
    PulseSchedule s;
    s.angles.reserve(n_ions);
    double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n_ions)));
    s.angles.push_back(theta);
    for (int n = 2; n <= n_ions; ++n) {
        theta = std::asin(std::clamp(std::tan(theta), -1.0, 1.0));
        s.angles.push_back(theta);
    }
    return s;
}

// Largest pulse angle the mode can deliver at the given z plane.
inline double max_pulse_angle(const CavityMode& mode, double velocity, double z_plane) {
    return mode.omega0 * effective_duration(mode, velocity) *
           std::cos(2.0 * std::numbers::pi * z_plane / mode.wavelength);
}

// Invert Omega0 exp(-y^2/w^2) cos(2 pi z/lambda) t_eff = theta for y >= 0.
inline double invert_coupling(const CavityMode& mode, double velocity,
                              double theta_target, double z_plane = 0.0) {
    mode.validate();
    detail::require_finite(theta_target, "theta_target");
    if (theta_target <= 0.0)
        throw invalid_argument_error("invert_coupling: theta_target must be > 0");
    const double theta_max = max_pulse_angle(mode, velocity, z_plane);
    if (theta_max <= 0.0) {
        std::ostringstream msg;
        msg << "invert_coupling: standing-wave factor <= 0 at z = " << z_plane
            << " m; no positive coupling available";
        throw infeasible_design_error(msg.str(), theta_max - theta_target);
    }
    if (theta_target > theta_max) {
        std::ostringstream msg;
        msg << "invert_coupling: theta_target = " << theta_target
            << " rad exceeds achievable maximum " << theta_max << " rad";
        throw infeasible_design_error(msg.str(), theta_max - theta_target);
    }
    return mode.waist * std::sqrt(std::log(theta_max / theta_target));
}

// Bisection on y in [0, 10 w]; cross-check for the closed form.
inline double invert_coupling_bisection(const CavityMode& mode, double velocity,
                                        double theta_target, double z_plane = 0.0) {
    mode.validate();
    if (theta_target <= 0.0)
        throw invalid_argument_error("invert_coupling_bisection: theta_target must be > 0");
    const double theta_max = max_pulse_angle(mode, velocity, z_plane);
    if (theta_target > theta_max)
        throw infeasible_design_error("invert_coupling_bisection: target exceeds maximum",
                                      theta_max - theta_target);
    const double t_eff = effective_duration(mode, velocity);
    auto angle_at = [&](double y) {
        return pulse_angle(coupling_strength(mode, y, z_plane), t_eff);
    };
    double lo = 0.0, hi = 10.0 * mode.waist; // angle_at decreases in y
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (angle_at(mid) >= theta_target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-18) break;
    }
    return 0.5 * (lo + hi);
}

inline double feasibility_margin(const DesignProblem& p) {
    p.validate();
    return max_pulse_angle(p.mode, p.velocity, p.z_plane) - std::numbers::pi / 2.0;
}

// Angles + couplings + trap offsets for an N-ion equal-amplitude state.
// Positions decrease strictly with n: later ions need larger angles, hence
// stronger coupling, hence smaller y.
inline DesignSolution solve_positions(const DesignProblem& p) {
    p.validate();
    const double theta_max = max_pulse_angle(p.mode, p.velocity, p.z_plane);
    DesignSolution sol;
    sol.angles = required_angles(p.n_ions);
    for (int n = 1; n <= p.n_ions; ++n) {
        if (sol.angles.angles[n - 1] > theta_max) {
            std::ostringstream msg;
            msg << "solve_positions: ion " << n << " of " << p.n_ions
                << " needs pulse angle " << sol.angles.angles[n - 1]
                << " rad but the achievable maximum is " << theta_max
                << " rad (feasibility margin "
                << theta_max - std::numbers::pi / 2.0 << " rad)";
            throw infeasible_design_error(msg.str(), theta_max - std::numbers::pi / 2.0, n);
        }
    }
    const double t_eff = effective_duration(p.mode, p.velocity);
    sol.couplings.reserve(p.n_ions);
    sol.positions.reserve(p.n_ions);
    sol.residuals.reserve(p.n_ions);
    for (double theta : sol.angles.angles) {
        const double y = invert_coupling(p.mode, p.velocity, theta, p.z_plane);
        const double back = pulse_angle(coupling_strength(p.mode, y, p.z_plane), t_eff);
        sol.positions.push_back(y);
        sol.couplings.push_back(coupling_strength(p.mode, y, p.z_plane));
        sol.residuals.push_back(std::abs(back - theta));
    }
    return sol;
}

inline IonArray layout_from_solution(const DesignSolution& sol, double pitch,
                                     double z_plane = 0.0) {
    return IonArray::uniform(sol.positions, pitch, z_plane);
}

struct NestedCheckReport {
    bool pass = true;
    double max_deviation = 0.0; // m
};

// theta_n depends only on N-n+1, so the trailing N-1 positions of an N-ion
// solution must equal the (N-1)-ion solution. Regression check over a set of
// solutions keyed by N.
inline NestedCheckReport nested_w_property_check(const std::map<int, DesignSolution>& solutions,
                                                 double tol = 1e-15) {
    NestedCheckReport rep;
    for (const auto& [n, sol] : solutions) {
        auto prev = solutions.find(n - 1);
        if (prev == solutions.end()) continue;
        const auto& big = sol.positions;
        const auto& small = prev->second.positions;
        for (std::size_t i = 0; i < small.size(); ++i) {
            const double dev = std::abs(big[i + 1] - small[i]);
            rep.max_deviation = std::max(rep.max_deviation, dev);
        }
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

} // namespace wbus

#endif // WBUS_DESIGN_HPP
