#include <cmath>
#include <numbers>

#include "doctest.h"
#include "steklov/catenoid_slab.hpp"
#include "steklov/maximizer.hpp"
#include "steklov/numerics.hpp"
#include "steklov/rotinv.hpp"

using namespace steklov;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double defect(double z, double a, double nu) {
    return (1.0 - nu) * std::tanh((1.0 - nu) * (z - a)) - nu * coth(nu * z);
}
} // namespace

TEST_CASE("symmetric slab reduces to the optimal cylinder") {
    for (double nu : {0.1, 0.25, 0.4}) {
        Flux f = reduce_flux(nu);
        auto [z1, z2] = slab_roots(0.0, f);
        double M = m_star(f);
        CHECK(std::fabs(z2 - M) <= 1e-10);
        CHECK(std::fabs(z1 + M) <= 1e-10);
        SlabData d = slab_data(0.0, f);
        CHECK(d.T == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(d.ratio == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::fabs(d.g - sigma2_star(f).sigma2_star_normalized) <= 1e-9);
    }
}

TEST_CASE("root certificates and large-offset asymptote") {
    Flux f = reduce_flux(0.3);
    for (double a : {0.0, 1.0, 5.0}) {
        auto [z1, z2] = slab_roots(a, f);
        CHECK(z1 < 0.0);
        CHECK(z2 > 0.0);
        CHECK(defect(z1 - 1e-6, a, 0.3) * defect(z1 + 1e-6, a, 0.3) < 0.0);
        CHECK(defect(z2 - 1e-6, a, 0.3) * defect(z2 + 1e-6, a, 0.3) < 0.0);
    }
    double z1_limit = -std::atanh(0.3 / 0.7) / 0.3;  // -(1/nu) arccoth((1-nu)/nu)
    CHECK(std::fabs(slab_roots(5.0, f).first - z1_limit) <= 1e-3);
    CHECK(std::fabs(slab_roots(20.0, f).first - z1_limit) <= 1e-3);
    CHECK_THROWS_AS(slab_roots(1.0, reduce_flux(0.0)), FluxOutOfRange);
}

TEST_CASE("offset symmetry") {
    Flux f = reduce_flux(0.3);
    for (double a : {0.5, 1.0, 2.0}) {
        SlabData plus = slab_data(a, f);
        SlabData minus = slab_data(-a, f);
        CHECK(std::fabs(plus.g - minus.g) <= 1e-9);
        CHECK(std::fabs(plus.z1 + minus.z2) <= 1e-9);
        CHECK(std::fabs(plus.z2 + minus.z1) <= 1e-9);
    }
}

TEST_CASE("ratio sweeps away from 1") {
    Flux f = reduce_flux(0.3);
    CHECK(slab_data(0.0, f).ratio == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::fabs(slab_data(3.0, f).ratio - 1.0) > 0.1);
    // ratio is 1 only at a = 0 on the scanned range
    for (double a : {0.25, 0.5, 1.0, 2.0, 3.0}) {
        CHECK(std::fabs(slab_data(a, f).ratio - 1.0) > 1e-3);
    }
}

TEST_CASE("root derivative closed form") {
    for (double a : {0.0, 1.0}) {
        for (double nu : {0.2, 0.4}) {
            Flux f = reduce_flux(nu);
            double h = 1e-6;
            for (SlabRoot which : {SlabRoot::z1, SlabRoot::z2}) {
                auto pick = [&](double aa) {
                    auto [r1, r2] = slab_roots(aa, f);
                    return which == SlabRoot::z1 ? r1 : r2;
                };
                double fd = (pick(a + h) - pick(a - h)) / (2 * h);
                double cf = z_prime(a, f, which);
                CHECK(std::fabs(fd - cf) / std::max(1.0, std::fabs(cf)) <= 1e-5);
            }
        }
    }
    Flux f = reduce_flux(0.3);
    CHECK(z_prime(0.0, f, SlabRoot::z1) > 0.0);
    CHECK(z_prime(0.0, f, SlabRoot::z2) > 0.0);
    for (int i = 0; i <= 12; ++i) {
        double a = 3.0 * i / 12.0;
        CHECK(z_prime(a, f, SlabRoot::z1) > 0.0);
        CHECK(z_prime(a, f, SlabRoot::z2) > 0.0);
    }
}

TEST_CASE("Robin ratios of the two eigenfunction families agree") {
    for (double a : {0.0, 0.7, 2.0}) {
        for (double nu : {0.2, 0.35}) {
            SlabRobinRatios r = slab_robin_ratios(a, reduce_flux(nu));
            CHECK(std::fabs(r.u1_at_z2 - r.u2_at_z2) <= 1e-12);
            CHECK(std::fabs(r.u1_at_z1 - r.u2_at_z1) <= 1e-12);
        }
    }
}

TEST_CASE("objective: dual evaluation route") {
    Flux f = reduce_flux(0.3);
    for (double a : {0.0, 0.5, 1.5, 4.0, 20.0}) {
        SlabData d = slab_data(a, f);
        double direct = two_pi * 0.3 * (coth(0.3 * d.z2) - coth(0.3 * d.z1));
        CHECK(d.g == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("objective: monotone decrease") {
    ScanVerdict v = g_monotonicity_scan(reduce_flux(0.3), 3.0, 64);
    CHECK(v.strictly_decreasing);
    CHECK(v.max_at_zero);
    ScanVerdict v2 = g_monotonicity_scan(reduce_flux(0.3), 3.0, 128);
    CHECK(v2.strictly_decreasing == v.strictly_decreasing);
    CHECK(v2.max_at_zero == v.max_at_zero);
    CHECK_THROWS_AS(g_monotonicity_scan(reduce_flux(0.3), 3.0, 8), GridTooCoarse);
}

TEST_CASE("slab objective matches the fixed-ratio crossing maximum") {
    Flux f = reduce_flux(0.3);
    for (double a : {0.5, 1.0, 2.0}) {
        SlabData d = slab_data(a, f);
        double Z = crossing_length(d.ratio, f);
        CHECK(std::fabs(Z - (d.z2 - d.z1)) <= 1e-8);
        ModePair p = normalized_branch_pair(RotInvAnnulus{d.ratio, Z, f}, 0);
        CHECK(std::fabs(p.sigma2 - d.g) <= 1e-8);
    }
    // an offset below 0 realizes ratios above 1; frozen cross-check at A = 2
    SlabData d = slab_data(-2.0, f);
    CHECK(d.ratio > 1.0);
    double Z = crossing_length(d.ratio, f);
    CHECK(std::fabs(Z - (d.z2 - d.z1)) <= 1e-8);
}
