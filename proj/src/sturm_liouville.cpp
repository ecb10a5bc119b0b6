#include "cheeger/sturm_liouville.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "cheeger/errors.hpp"
#include "cheeger/ode.hpp"
#include "cheeger/roots.hpp"

namespace cheeger::sl {

namespace {

void require_positive_h(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("h must be positive and finite");
    }
}

}  // namespace

double weight_J(double h, double tau) {
    return std::cosh(tau) + h * std::sinh(tau);
}

SLProblem endpoint_T(double h) {
    require_positive_h(h);
    const double target = 1.0 / h;
    auto g = [&](double t) { return std::sinh(t) + h * (std::cosh(t) - 1.0) - target; };

    // g is increasing and convex with g(0) = -1/h < 0, and
    // g(asinh(1/h)) = h (cosh - 1) >= 0, so Newton from asinh(1/h) descends
    // monotonically onto the root.
    double t = std::asinh(target);
    for (int i = 0; i < 100; ++i) {
        const double gt = g(t);
        const double step = gt / weight_J(h, t);  // g' = J
        const double next = t - step;
        if (next == t) break;
        t = next;
        if (std::abs(step) < 1e-17 * (1.0 + std::abs(t))) break;
    }
    return SLProblem{h, t};
}

EigenQuery shoot(const SLProblem& p, double lambda) {
    require_positive_h(p.h);
    if (lambda < 0.0 || !std::isfinite(lambda)) {
        throw DomainError("lambda must be nonnegative");
    }

    const double h = p.h;
    auto rhs = [h, lambda](double tau, const std::array<double, 2>& y) {
        const double J = std::cosh(tau) + h * std::sinh(tau);
        const double Jp = std::sinh(tau) + h * std::cosh(tau);
        return std::array<double, 2>{y[1], -(Jp / J) * y[1] - lambda * y[0]};
    };

    ode::StepControl ctl;
    ctl.abs_tol = 1e-11;
    ctl.rel_tol = 1e-11;
    ctl.max_step = p.T / 64.0;

    int flips = 0;
    double u_prev = 1.0;
    const auto on_step = [&](double tau, const std::array<double, 2>& y) {
        // The endpoint tau = 0 is outside the open interval; skipping it also
        // keeps an eigenvalue's u(0) ~ 0 from registering as a flip.
        if (tau <= 0.0) return;
        if (y[0] != 0.0) {
            if ((y[0] > 0.0) != (u_prev > 0.0)) ++flips;
            u_prev = y[0];
        }
    };

    const auto y0 = std::array<double, 2>{1.0, 0.0};
    const auto y = ode::integrate<2>(rhs, p.T, 0.0, y0, ctl, on_step);
    return EigenQuery{lambda, y[0], flips};
}

double lambda1(double h, double lambda_max) {
    const SLProblem p = endpoint_T(h);

    const double step = std::max(0.05, h * h / 8.0);
    double lo = 0.0;
    double flo = 1.0;  // u is identically 1 at lambda = 0
    double hi = step;
    double fhi = shoot(p, hi).shoot_value;
    while ((fhi > 0.0) == (flo > 0.0)) {
        lo = hi;
        flo = fhi;
        hi += step;
        if (hi > lambda_max) {
            throw SearchError("lambda1: no sign change of the shot below lambda_max");
        }
        fhi = shoot(p, hi).shoot_value;
    }

    const double lam = roots::brent([&](double l) { return shoot(p, l).shoot_value; }, lo, hi,
                                    {.x_tol = 1e-11, .max_iter = 256});
    // Ground-state check from just below the root: there u has no interior
    // zero, while anything at or above a higher eigenvalue still flips.
    const double probe = lam - std::max(1e-9, 1e-7 * lam);
    if (probe > 0.0 && shoot(p, probe).n_sign_changes != 0) {
        throw NumericalError("lambda1: located eigenvalue is not the ground state");
    }
    return lam;
}

double invert_lambda1(double lambda_target) {
    if (!(lambda_target > 0.0) || !std::isfinite(lambda_target)) {
        throw DomainError("lambda target must be positive");
    }
    double lo = 1e-4;
    double hi = 10.0;
    auto f = [&](double h) { return lambda1(h) - lambda_target; };
    double flo = f(lo);
    if (flo > 0.0) {
        throw SearchError("invert_lambda1: target below the achievable range");
    }
    double fhi = f(hi);
    while (fhi < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e4) {
            throw SearchError("invert_lambda1: target above the achievable range");
        }
        fhi = f(hi);
    }
    const double h = roots::brent(f, lo, hi, {.x_tol = 1e-12, .max_iter = 256});
    if (std::abs(lambda1(h) - lambda_target) > 1e-8) {
        throw NumericalError("invert_lambda1: residual above tolerance");
    }
    return h;
}

double fd_oracle(double h, int n_points) {
    if (n_points < 100) throw DomainError("n_points must be at least 100");
    const SLProblem p = endpoint_T(h);
    const int n = n_points;
    const double dx = p.T / n;

    // -(J u')' = lambda J u on nodes i = 1..n, u_0 = 0, flux zero at T
    // (half cell at the last node). A is symmetric tridiagonal, B diagonal.
    std::vector<double> diag(n), off(n - 1), mass(n);
    for (int i = 1; i <= n; ++i) {
        const double jm = weight_J(h, (i - 0.5) * dx);
        if (i < n) {
            const double jp = weight_J(h, (i + 0.5) * dx);
            diag[i - 1] = (jm + jp) / (dx * dx);
            off[i - 1] = -jp / (dx * dx);
            mass[i - 1] = weight_J(h, i * dx);
        } else {
            diag[i - 1] = jm / (dx * dx);
            mass[i - 1] = 0.5 * weight_J(h, p.T);
        }
    }

    // Inertia count: negative pivots of the LDL^T factorization of A - x B
    // equal the number of generalized eigenvalues below x.
    auto count_below = [&](double x) {
        int count = 0;
        double d = diag[0] - x * mass[0];
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
        for (int k = 1; k < n; ++k) {
            d = (diag[k] - x * mass[k]) - off[k - 1] * off[k - 1] / d;
            if (d == 0.0) d = -1e-300;
            if (d < 0.0) ++count;
        }
        return count;
    };

    double lo = 0.0;
    double hi = 1.0;
    while (count_below(hi) < 1) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e8) throw NumericalError("fd_oracle: no eigenvalue below 1e8");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ScanResult monotonicity_scan(double h_min, double h_max, int steps) {
    if (!(h_min > 0.0) || !(h_min < h_max)) {
        throw DomainError("scan requires 0 < h_min < h_max");
    }
    if (steps < 2) throw DomainError("scan requires at least 2 grid points");

    ScanResult result;
    result.points.reserve(steps);
    const double dh = (h_max - h_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double h = (i == steps - 1) ? h_max : h_min + i * dh;
        result.points.push_back({h, lambda1(h)});
    }
    result.strictly_increasing = true;
    for (std::size_t i = 1; i < result.points.size(); ++i) {
        if (!(result.points[i].lambda1 > result.points[i - 1].lambda1)) {
            result.strictly_increasing = false;
            break;
        }
    }
    return result;
}

SpectralBounds classical_bounds(double h) {
    require_positive_h(h);
    return SpectralBounds{0.25 * h * h, 2.0 * h + 10.0 * h * h, lambda1(h)};
}

double buser_h_lower(double lambda) {
    if (lambda < 0.0 || !std::isfinite(lambda)) {
        throw DomainError("lambda must be nonnegative");
    }
    return (-1.0 + std::sqrt(1.0 + 10.0 * lambda)) / 10.0;
}

SelbergReport selberg_test(double ceiling, double lambda_kim_sarnak, double lambda_selberg) {
    SelbergReport report;
    report.kim_sarnak_bound = invert_lambda1(lambda_kim_sarnak);
    report.selberg_bound = invert_lambda1(lambda_selberg);
    report.ceiling = ceiling;
    report.consistent = report.kim_sarnak_bound < ceiling && report.selberg_bound < ceiling;
    return report;
}

}  // namespace cheeger::sl
