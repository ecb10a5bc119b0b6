#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cheeger/errors.hpp"
#include "cheeger/formulas.hpp"

using namespace cheeger;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("disk ratio matches hand evaluations") {
    // sinh(ln 3) = 4/3, cosh(ln 3) - 1 = 2/3.
    CHECK(disk_ratio(std::log(3.0)) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(disk_ratio(1.0) ==
          doctest::Approx((std::exp(1.0) - std::exp(-1.0)) / (std::exp(1.0) + std::exp(-1.0) - 2.0))
              .epsilon(1e-13));
    const double far = disk_ratio(20.0);
    CHECK(far > 1.0);
    CHECK(far < 1.0 + 1e-8);
    CHECK_THROWS_AS(disk_ratio(0.0), DomainError);
    CHECK_THROWS_AS(disk_ratio(-1.0), DomainError);
}

TEST_CASE("disk ratio decreases and stays above 1") {
    double prev = disk_ratio(1e-3);
    for (double r = 0.05; r < 12.0; r += 0.05) {
        const double cur = disk_ratio(r);
        CHECK(cur < prev);
        CHECK(cur > 1.0);
        prev = cur;
    }
}

TEST_CASE("disk stats for a prescribed area") {
    const RegionStats half = disk_stats_for_area(2.0 * kPi);
    CHECK(half.boundary_length == doctest::Approx(2.0 * kPi * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(half.ratio() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));

    // cosh r = 3 at area 4*pi, so the ratio is sqrt(2).
    CHECK(disk_stats_for_area(4.0 * kPi).ratio() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

    const RegionStats tiny = disk_stats_for_area(1e-6);
    const double lhs = tiny.boundary_length * tiny.boundary_length;
    const double rhs = tiny.area * tiny.area + 4.0 * kPi * tiny.area;
    CHECK(rel_diff(lhs, rhs) < 1e-12);

    CHECK_THROWS_AS(disk_stats_for_area(0.0), DomainError);
}

TEST_CASE("horocusp ratio is exactly 1 and below every disk and annulus") {
    CHECK(horocusp_ratio() == 1.0);
    CHECK(horocusp_ratio() < disk_ratio(5.0));
    CHECK(horocusp_ratio() < annulus_ratio(1.0, 100.0));
    for (double r = 0.1; r < 30.0; r *= 1.7) {
        CHECK(horocusp_ratio() < disk_ratio(r));
    }
    for (double a = 0.01; a < 1e6; a *= 13.0) {
        CHECK(horocusp_ratio() < annulus_ratio(0.5, a));
        CHECK(horocusp_ratio() < annulus_ratio(7.0, a));
    }
}

TEST_CASE("neighbor curve fields") {
    const auto flat = neighbor_curve(1.0, 0.0);
    CHECK(flat.L == 1.0);
    CHECK(flat.A == 0.0);
    CHECK(flat.kappa == 0.0);

    const auto unit = neighbor_curve(1.0, 1.0);
    CHECK(unit.L == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(unit.A == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(unit.kappa == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));

    CHECK_THROWS_AS(neighbor_curve(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(neighbor_curve(1.0, -0.5), DomainError);
}

TEST_CASE("neighbor curve identity L^2 = A^2 + L0^2 over random samples") {
    std::mt19937 rng(20250811);
    std::uniform_real_distribution<double> log_len(std::log(0.01), std::log(100.0));
    std::uniform_real_distribution<double> offset(0.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const double L0 = std::exp(log_len(rng));
        const auto nc = neighbor_curve(L0, offset(rng));
        const double lhs = nc.L * nc.L;
        const double rhs = nc.A * nc.A + nc.L0 * nc.L0;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs));
    }
}

TEST_CASE("annulus ratio") {
    CHECK(annulus_ratio(1.0, 2.0 * kPi) ==
          doctest::Approx(std::sqrt(1.0 + 1.0 / (kPi * kPi))).epsilon(1e-13));
    CHECK(annulus_ratio(2.0, 4.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    const double thin = annulus_ratio(1.0, 1e6);
    CHECK(thin > 1.0);
    CHECK(thin < 1.0 + 1e-11);
    CHECK_THROWS_AS(annulus_ratio(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(annulus_ratio(1.0, 0.0), DomainError);
}

TEST_CASE("annulus ratio agrees with the two-sided collar family") {
    // A collar of area A = 2 L0 sinh(s) has boundary 2 L0 cosh(s).
    for (double L0 : {0.3, 1.0, 4.0}) {
        for (double area : {0.5, 2.0, 9.0}) {
            const double s = std::asinh(area / (2.0 * L0));
            const double family = (2.0 * L0 * std::cosh(s)) / (2.0 * L0 * std::sinh(s));
            CHECK(rel_diff(annulus_ratio(L0, area), family) < 1e-10);
        }
    }
}

TEST_CASE("annulus complement shares the collar boundary") {
    // Complement of area A has the collar's boundary sqrt(4 L0^2 + (total-A)^2).
    const double total = 4.0 * kPi;
    for (double L0 : {0.5, 1.0, 2.0}) {
        for (double area : {1.0, kPi, 2.0 * kPi, 3.0 * kPi}) {
            const double boundary = std::sqrt(4.0 * L0 * L0 + (total - area) * (total - area));
            CHECK(rel_diff(annulus_complement_ratio(L0, area, total), boundary / area) < 1e-12);
        }
    }

    // At half the total area the annulus and its complement agree.
    CHECK(rel_diff(annulus_complement_ratio(1.0, 2.0 * kPi, total), annulus_ratio(1.0, 2.0 * kPi)) <
          1e-12);

    // Decreasing in the complement area.
    CHECK(annulus_complement_ratio(1.0, 2.0 * kPi, total) <
          annulus_complement_ratio(1.0, kPi, total));

    CHECK_THROWS_AS(annulus_complement_ratio(1.0, 4.0 * kPi, 4.0 * kPi), DomainError);
    CHECK_THROWS_AS(annulus_complement_ratio(1.0, 5.0, 4.0), DomainError);
}

TEST_CASE("equidistant growing-side ratio") {
    CHECK(equidistant_ratio_A(1.0, -1, 0.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-13));

    // Family minimum at the critical offset: ell / sqrt(ell^2 + 4 pi^2 chi^2).
    const double s_star = critical_offset(1.0, -1);
    CHECK(equidistant_ratio_A(1.0, -1, s_star) ==
          doctest::Approx(1.0 / std::sqrt(1.0 + 4.0 * kPi * kPi)).epsilon(1e-12));

    CHECK(equidistant_ratio_A(1e-9, -1, 0.0) == doctest::Approx(1e-9 / (2.0 * kPi)).epsilon(1e-13));
    CHECK_THROWS_AS(equidistant_ratio_A(1.0, 0, 0.0), DomainError);
    CHECK_THROWS_AS(equidistant_ratio_A(1.0, 1, 0.0), DomainError);
    CHECK_THROWS_AS(equidistant_ratio_A(-1.0, -1, 0.0), DomainError);
}

TEST_CASE("equidistant shrinking-side ratio") {
    CHECK(equidistant_ratio_B(1.0, -1, 0.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-13));
    CHECK(equidistant_ratio_B(1.0, -1, 1.0) ==
          doctest::Approx(std::cosh(1.0) / (2.0 * kPi - std::sinh(1.0))).epsilon(1e-13));
    CHECK_THROWS_AS(equidistant_ratio_B(1.0, -1, std::asinh(2.0 * kPi)), DomainError);

    double prev = equidistant_ratio_B(1.0, -1, 0.0);
    for (double s = 0.05; s < std::asinh(2.0 * kPi) - 0.05; s += 0.05) {
        const double cur = equidistant_ratio_B(1.0, -1, s);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("critical offset formula and grid-search oracle") {
    CHECK(critical_offset(2.0 * kPi, -1) == doctest::Approx(std::asinh(1.0)).epsilon(1e-13));
    CHECK(critical_offset(1e-9, -1) > 0.0);
    CHECK(critical_offset(1e-9, -1) < 1e-9);
    CHECK_THROWS_AS(critical_offset(1.0, 0), DomainError);

    // Brute-force argmin over a dense grid lands within one grid step.
    const double step = 1e-3;
    double best_s = 0.0;
    double best = equidistant_ratio_A(1.0, -1, 0.0);
    for (double s = step; s <= 2.0; s += step) {
        const double v = equidistant_ratio_A(1.0, -1, s);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    CHECK(std::abs(best_s - critical_offset(1.0, -1)) <= step);
}

TEST_CASE("equidistant family minimum sits at the critical offset for random inputs") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> log_ell(std::log(0.1), std::log(10.0));
    std::uniform_int_distribution<int> chi_dist(-5, -1);
    for (int i = 0; i < 50; ++i) {
        const double ell = std::exp(log_ell(rng));
        const int chi = chi_dist(rng);
        const double s_star = critical_offset(ell, chi);
        const double at_star = equidistant_ratio_A(ell, chi, s_star);
        CHECK(at_star <= equidistant_ratio_A(ell, chi, s_star * 0.9) + 1e-15);
        CHECK(at_star <= equidistant_ratio_A(ell, chi, s_star * 1.1 + 1e-6) + 1e-15);
        const double closed_form =
            ell / std::sqrt(ell * ell + 4.0 * kPi * kPi * double(chi) * double(chi));
        CHECK(rel_diff(at_star, closed_form) < 1e-10);
    }
}

TEST_CASE("boundary length bound") {
    CHECK(length_upper_bound(4.0 * kPi, 0) ==
          doctest::Approx(2.0 * kPi * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(length_upper_bound(2.0 * kPi, 3) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(length_upper_bound(2.0 * kPi, 1) == doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("union ratio is the mediant and never drops below the smaller input") {
    const auto equal = union_ratio(RegionStats(1.0, 1.0), RegionStats(1.0, 1.0));
    CHECK(equal.ratio() == doctest::Approx(1.0));

    const auto mixed = union_ratio(RegionStats(1.0, 2.0), RegionStats(3.0, 2.0));
    CHECK(mixed.ratio() == doctest::Approx(1.0));
    CHECK(mixed.ratio() > 0.5);

    const auto with_closed = union_ratio(RegionStats(0.0, 5.0), RegionStats(2.0, 5.0));
    CHECK(with_closed.ratio() == doctest::Approx(0.2));
    CHECK(with_closed.ratio() > 0.0);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> len(0.0, 10.0);
    std::uniform_real_distribution<double> ar(0.1, 10.0);
    for (int i = 0; i < 500; ++i) {
        const RegionStats a(len(rng), ar(rng));
        const RegionStats b(len(rng), ar(rng));
        const double lo = std::min(a.ratio(), b.ratio());
        const double u = union_ratio(a, b).ratio();
        CHECK(u >= lo - 1e-12 * std::max(1.0, lo));
        if (std::abs(a.ratio() - b.ratio()) > 1e-9) {
            CHECK(u > lo);
        }
    }
}

TEST_CASE("flat torus constant") {
    CHECK(flat_torus_cheeger(1.0, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(flat_torus_cheeger(1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(flat_torus_cheeger(2.0, 1.0), DomainError);
}

TEST_CASE("genus bound") {
    CHECK(genus_bound(1.0) == doctest::Approx(28.0));
    CHECK(genus_bound(0.0) == doctest::Approx(1.0));
    CHECK(genus_bound(2.0) == doctest::Approx(217.0));
    CHECK_THROWS_AS(genus_bound(-0.1), DomainError);
}

TEST_CASE("region stats validation") {
    CHECK_THROWS_AS(RegionStats(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(RegionStats(-1.0, 1.0), DomainError);
}
