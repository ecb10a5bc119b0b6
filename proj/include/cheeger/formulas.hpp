#pragma once

namespace cheeger {

// Boundary-length / area pair with its isoperimetric ratio; the currency
// every candidate comparison is expressed in.
struct RegionStats {
    double boundary_length;
    double area;

    RegionStats(double boundary_length, double area);
    double ratio() const { return boundary_length / area; }

    bool operator==(const RegionStats&) const = default;
};

// Constant-distance pushoff of a closed geodesic of length L0: the curve at
// normal offset s has length L = L0 cosh s, curvature kappa = tanh s, and
// sweeps area A = L0 sinh s, so L^2 = A^2 + L0^2.
struct NeighborCurveData {
    double L0;
    double s;
    double L;
    double A;
    double kappa;
};

// Ratio of a hyperbolic disk of radius r: sinh r / (cosh r - 1). Strictly
// decreasing, limit 1 from above.
double disk_ratio(double r);

// Disk of prescribed area: boundary length sqrt(area^2 + 4*pi*area).
RegionStats disk_stats_for_area(double area);

// A horocusp neighborhood has ratio exactly 1.
double horocusp_ratio();

NeighborCurveData neighbor_curve(double L0, double s);

// Two-sided collar of area `area` around a geodesic of length L0:
// sqrt(1 + (2 L0 / area)^2). Strictly decreasing in area, > 1.
double annulus_ratio(double L0, double area);

// Complement (of area `area`) of such a collar in a surface of total_area:
// shares the collar's boundary, so the ratio is
// sqrt((total_area/area - 1)^2 + (2 L0 / area)^2).
double annulus_complement_ratio(double L0, double area, double total_area);

// Equidistant family pushed off a splitting with boundary length `ell` on the
// side of Euler characteristic chi (< 0). The growing side has
//   ratio(s) = ell cosh s / (-2 pi chi + ell sinh s),
// the shrinking side
//   ratio(s) = ell cosh s / (-2 pi chi - ell sinh s).
double equidistant_ratio_A(double ell, int chi, double s);
double equidistant_ratio_B(double ell, int chi, double s);

// Offset minimizing the growing-side ratio: arcsinh(ell / (-2 pi chi)).
double critical_offset(double ell, int chi);

// Largest boundary length a minimizing region can have: for a compact surface
// sqrt(area^2/4 + 2 pi area), with a cusp present area/2.
double length_upper_bound(double total_area, int cusps);

// Stats of the disjoint union: componentwise sums. The ratio is never below
// the smaller input ratio, with equality exactly at equal inputs.
RegionStats union_ratio(const RegionStats& r1, const RegionStats& r2);

// Cheeger constant of the flat torus / Klein bottle on an a-by-b rectangle
// (a <= b): 4/b.
double flat_torus_cheeger(double a, double b);

// Genus bound 27 C^3 + 1 below which a half-area embedded disk could exist.
double genus_bound(double C);

}  // namespace cheeger
