#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cheeger {

// A simple closed geodesic, identified by name.
struct Geodesic {
    std::string id;
    double length = 0.0;

    bool operator==(const Geodesic&) const = default;
};

// A separating multicurve dividing the surface into sides A and B, with the
// Euler characteristic of each side and the least normal distance at which
// the equidistant family stops being embedded. Offsets are measured from the
// curves toward the B side.
struct Splitting {
    std::vector<std::string> curve_ids;  // sorted, no duplicates
    int chi_a = 0;
    int chi_b = 0;
    double clearance = 0.0;

    bool operator==(const Splitting&) const = default;
};

// Topological and metric inputs for one surface: everything upstream of the
// solver (lengths, splittings, clearances) is taken as given.
struct SurfaceDescription {
    int genus = 0;
    int cusps = 0;
    std::vector<Geodesic> geodesics;
    std::vector<Splitting> splittings;

    bool operator==(const SurfaceDescription&) const = default;
};

// chi(S) = 2 - 2 genus - cusps.
int euler_characteristic(const SurfaceDescription& s);

// Throws ValidationError naming the violated invariant. Checked invariants:
// "hyperbolicity" (2g - 2 + cusps > 0), "positive geodesic length",
// "unique geodesic id", "nonempty curve set", "known curve id",
// "unique splitting curves", "negative side chi", "euler additivity",
// "positive clearance", "nonnegative genus", "nonnegative cusps".
void validate(const SurfaceDescription& s);

// Parse a surface description document (JSON); validates before returning.
SurfaceDescription parse_surface(std::string_view text);

// Inverse of parse_surface; key order genus, cusps, geodesics, splittings.
std::string serialize_surface(const SurfaceDescription& s);

// Gauss-Bonnet: 2 pi (2 genus - 2 + cusps).
double surface_area(const SurfaceDescription& s);

// Sum of the splitting's curve lengths.
double splitting_length(const SurfaceDescription& s, const Splitting& sp);

// Splittings with total curve length <= budget, ascending by total length,
// ties broken by lexicographic curve-id set.
std::vector<Splitting> admissible_collections(const SurfaceDescription& s, double budget);

// Boundary-length bound specialized to this surface.
double length_upper_bound(const SurfaceDescription& s);

}  // namespace cheeger
