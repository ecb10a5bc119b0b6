#include "cheeger/tolerance.hpp"

#include <cmath>
#include <cstdlib>

namespace cheeger {

namespace {

double initial_tolerance() {
    if (const char* env = std::getenv("CHEEGER_TOL")) {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end != env && value > 0.0 && std::isfinite(value)) {
            return value;
        }
    }
    return 1e-12;
}

double& tolerance_storage() {
    static double tol = initial_tolerance();
    return tol;
}

}  // namespace

double relative_tolerance() { return tolerance_storage(); }

void set_relative_tolerance(double tol) { tolerance_storage() = tol; }

bool nearly_equal(double a, double b, double rel_tol) {
    return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

bool nearly_equal(double a, double b) {
    return nearly_equal(a, b, relative_tolerance());
}

}  // namespace cheeger
