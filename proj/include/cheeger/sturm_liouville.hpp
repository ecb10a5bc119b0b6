#pragma once

#include <vector>

namespace cheeger::sl {

// The weighted eigenvalue problem on (0, T) with weight
// J(tau) = cosh(tau) + h sinh(tau), boundary conditions u(0) = 0, u'(T) = 0,
// and endpoint T fixed by  integral_0^T J = 1/h, i.e.
// sinh(T) + h (cosh(T) - 1) = 1/h.
struct SLProblem {
    double h;
    double T;
};

double weight_J(double h, double tau);

// Solve the endpoint equation for T; residual at machine level.
SLProblem endpoint_T(double h);

// One backward shot: integrate u'' + (J'/J) u' + lambda u = 0 from tau = T
// (u = 1, u' = 0) down to tau = 0. shoot_value = u(0); sign changes are
// counted at accepted integrator steps strictly inside (0, T).
struct EigenQuery {
    double lambda;
    double shoot_value;
    int n_sign_changes;
};

EigenQuery shoot(const SLProblem& p, double lambda);

// Smallest positive lambda with u(0) = 0, located by scanning lambda upward
// in steps of max(0.05, h^2/8) to the first sign change of shoot_value and
// refining with Brent. The returned eigenvalue's shot has no interior sign
// change.
double lambda1(double h, double lambda_max = 1e4);

// Inverse of lambda1 over h, bracketed on [1e-4, 10] with upward expansion.
double invert_lambda1(double lambda_target);

// Independent eigenvalue oracle: second-order finite differences on a uniform
// grid (Dirichlet at 0, Neumann at T via a half cell), smallest generalized
// eigenvalue by tridiagonal inertia bisection. n_points must be >= 100.
double fd_oracle(double h, int n_points);

struct ScanPoint {
    double h;
    double lambda1;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    bool strictly_increasing;
};

// lambda1 on the closed uniform grid [h_min, h_max] with `steps` points.
ScanResult monotonicity_scan(double h_min, double h_max, int steps);

// The classical bound pair around lambda_1 plus the eigenvalue bound:
// h^2/4 from below, 2h + 10h^2 from above, lambda1(omega(h)) in between.
struct SpectralBounds {
    double lambda_lower_cheeger;
    double lambda_upper_buser;
    double lambda_upper_agol;
};

SpectralBounds classical_bounds(double h);

// Positive root of 10 h^2 + 2 h = lambda. (At lambda = 1/4 this evaluates to
// about 0.0870829; a commonly quoted figure 0.0707 for the same bound does
// not match the inequality as stated.)
double buser_h_lower(double lambda);

// Invert lambda1 at the Kim-Sarnak constant 975/4096 and at the Selberg
// value 1/4, and compare both Cheeger lower bounds against the Brooks-Zuk
// ceiling 0.4402.
struct SelbergReport {
    double kim_sarnak_bound;
    double selberg_bound;
    double ceiling;
    bool consistent;
};

SelbergReport selberg_test(double ceiling = 0.4402,
                           double lambda_kim_sarnak = 975.0 / 4096.0,
                           double lambda_selberg = 0.25);

}  // namespace cheeger::sl
