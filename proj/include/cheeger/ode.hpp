#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "cheeger/errors.hpp"

namespace cheeger::ode {

struct StepControl {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    double max_step = std::numeric_limits<double>::infinity();
    long max_steps = 2'000'000;
};

// Dormand-Prince 5(4) embedded pair with FSAL and standard step control.
// Integrates y' = f(t, y) from t0 to t1 (either direction); on_step(t, y) is
// invoked after every accepted step, including the final one at t1.
template <std::size_t N, class RHS, class OnStep>
std::array<double, N> integrate(RHS&& f, double t0, double t1, std::array<double, N> y,
                                const StepControl& ctl, OnStep&& on_step) {
    using State = std::array<double, N>;
    if (t0 == t1) return y;

    static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                            a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                            a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    // b - b* (difference against the embedded 4th-order weights)
    static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                            e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    double t = t0;
    double h = dir * std::min({span / 64.0, ctl.max_step});

    State k1 = f(t, y);
    long steps = 0;
    while (true) {
        if (++steps > ctl.max_steps) {
            throw NumericalError("ode: step limit exceeded");
        }
        bool last = false;
        if ((t + h - t1) * dir >= 0.0) {
            h = t1 - t;
            last = true;
        }

        State k2, k3, k4, k5, k6, k7, ytmp, ynew;
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        k2 = f(t + c2 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(t + c3 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(t + c4 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(t + c5 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        k6 = f(t + h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = f(t + h, ynew);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = ctl.abs_tol + ctl.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / static_cast<double>(N));

        if (err <= 1.0) {
            t = last ? t1 : t + h;
            y = ynew;
            k1 = k7;  // FSAL
            on_step(t, y);
            if (last) return y;
        }

        const double factor = (err == 0.0)
                                  ? 5.0
                                  : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (std::abs(h) > ctl.max_step) h = dir * ctl.max_step;
        if (std::abs(h) < span * 1e-15) {
            throw NumericalError("ode: step size underflow");
        }
    }
}

template <std::size_t N, class RHS>
std::array<double, N> integrate(RHS&& f, double t0, double t1, std::array<double, N> y,
                                const StepControl& ctl = {}) {
    return integrate<N>(std::forward<RHS>(f), t0, t1, y, ctl,
                        [](double, const std::array<double, N>&) {});
}

}  // namespace cheeger::ode
