#ifndef WBUS_INTEGRATE_HPP
#define WBUS_INTEGRATE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "wbus/errors.hpp"

namespace wbus {

using StateVector = std::vector<std::complex<double>>;

// Classic fixed-step RK4 over a complex state vector. deriv(t, y, dydt) fills
// dydt; trace(step, t, y) is called after every step (and once at t0).
// n_steps may run backwards in time via t1 < t0; the step count is fixed up
// front, so runs are bit-reproducible.
template <typename Deriv, typename Trace>
void rk4_integrate(StateVector& y, double t0, double t1, long n_steps, Deriv&& deriv,
                   Trace&& trace) {
    if (n_steps < 1) throw invalid_argument_error("rk4_integrate: n_steps must be >= 1");
    const double dt = (t1 - t0) / static_cast<double>(n_steps);
    const std::size_t dim = y.size();
    StateVector k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    trace(0L, t0, y);
    double t = t0;
    for (long step = 0; step < n_steps; ++step) {
        deriv(t, y, k1);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        deriv(t + 0.5 * dt, tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        deriv(t + 0.5 * dt, tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + dt * k3[i];
        deriv(t + dt, tmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + dt * static_cast<double>(step + 1);
        trace(step + 1, t, y);
    }
}

template <typename Deriv>
void rk4_integrate(StateVector& y, double t0, double t1, long n_steps, Deriv&& deriv) {
    rk4_integrate(y, t0, t1, n_steps, deriv, [](long, double, const StateVector&) {});
}

} // namespace wbus

#endif // WBUS_INTEGRATE_HPP
