#include "cheeger/formulas.hpp"

#include <cmath>
#include <numbers>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {
constexpr double kPi = std::numbers::pi;

void require_finite_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(name) + " must be positive and finite");
    }
}
}  // namespace

RegionStats::RegionStats(double boundary_length_, double area_)
    : boundary_length(boundary_length_), area(area_) {
    if (!(area > 0.0) || !std::isfinite(area)) {
        throw DomainError("RegionStats: area must be positive");
    }
    if (boundary_length < 0.0 || !std::isfinite(boundary_length)) {
        throw DomainError("RegionStats: boundary length must be nonnegative");
    }
}

double disk_ratio(double r) {
    require_finite_positive(r, "disk radius");
    // sinh r / (cosh r - 1) = coth(r/2); the half-angle form stays exact for
    // large r where e^r would overflow.
    return 1.0 / std::tanh(0.5 * r);
}

RegionStats disk_stats_for_area(double area) {
    require_finite_positive(area, "disk area");
    return RegionStats(std::sqrt(area * area + 4.0 * kPi * area), area);
}

double horocusp_ratio() { return 1.0; }

NeighborCurveData neighbor_curve(double L0, double s) {
    require_finite_positive(L0, "geodesic length");
    if (s < 0.0 || !std::isfinite(s)) {
        throw DomainError("offset must be nonnegative");
    }
    return NeighborCurveData{L0, s, L0 * std::cosh(s), L0 * std::sinh(s), std::tanh(s)};
}

double annulus_ratio(double L0, double area) {
    require_finite_positive(L0, "geodesic length");
    require_finite_positive(area, "annulus area");
    const double t = 2.0 * L0 / area;
    return std::sqrt(1.0 + t * t);
}

double annulus_complement_ratio(double L0, double area, double total_area) {
    require_finite_positive(L0, "geodesic length");
    require_finite_positive(area, "complement area");
    if (!(area < total_area)) {
        throw DomainError("complement area must be less than the total area");
    }
    const double u = total_area / area - 1.0;
    const double t = 2.0 * L0 / area;
    return std::sqrt(u * u + t * t);
}

double equidistant_ratio_A(double ell, int chi, double s) {
    require_finite_positive(ell, "boundary length");
    if (chi >= 0) throw DomainError("side Euler characteristic must be negative");
    if (s < 0.0 || !std::isfinite(s)) throw DomainError("offset must be nonnegative");
    return ell * std::cosh(s) / (-2.0 * kPi * chi + ell * std::sinh(s));
}

double equidistant_ratio_B(double ell, int chi, double s) {
    require_finite_positive(ell, "boundary length");
    if (chi >= 0) throw DomainError("side Euler characteristic must be negative");
    if (s < 0.0 || !std::isfinite(s)) throw DomainError("offset must be nonnegative");
    const double area = -2.0 * kPi * chi - ell * std::sinh(s);
    if (!(area > 0.0)) {
        throw DomainError("shrinking side has no area left at this offset");
    }
    return ell * std::cosh(s) / area;
}

double critical_offset(double ell, int chi) {
    require_finite_positive(ell, "boundary length");
    if (chi >= 0) throw DomainError("side Euler characteristic must be negative");
    return std::asinh(ell / (-2.0 * kPi * chi));
}

double length_upper_bound(double total_area, int cusps) {
    require_finite_positive(total_area, "total area");
    if (cusps > 0) return 0.5 * total_area;
    return std::sqrt(0.25 * total_area * total_area + 2.0 * kPi * total_area);
}

RegionStats union_ratio(const RegionStats& r1, const RegionStats& r2) {
    return RegionStats(r1.boundary_length + r2.boundary_length, r1.area + r2.area);
}

double flat_torus_cheeger(double a, double b) {
    require_finite_positive(a, "side a");
    require_finite_positive(b, "side b");
    if (a > b) throw DomainError("sides must satisfy a <= b");
    return 4.0 / b;
}

double genus_bound(double C) {
    if (C < 0.0 || !std::isfinite(C)) throw DomainError("constant must be nonnegative");
    return 27.0 * C * C * C + 1.0;
}

}  // namespace cheeger
