#pragma once

namespace cheeger {

// Global relative tolerance used wherever two ratios or areas are compared
// for equality. Defaults to 1e-12; the CHEEGER_TOL environment variable
// overrides it (read once, at first use).
double relative_tolerance();
void set_relative_tolerance(double tol);

// |a - b| <= tol * max(|a|, |b|), with the global tolerance by default.
bool nearly_equal(double a, double b);
bool nearly_equal(double a, double b, double rel_tol);

}  // namespace cheeger
