#include "steklov/catenoid_slab.hpp"

#include <cmath>
#include <numbers>

#include "steklov/numerics.hpp"

namespace steklov {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_interior_flux(const Flux& flux) {
    if (!(flux.reduced > 0.0) || !(flux.reduced < 0.5))
        throw FluxOutOfRange("reduced flux must lie strictly between 0 and 1/2");
}

double slab_defect(double z, double a, double nu) {
    return (1.0 - nu) * std::tanh((1.0 - nu) * (z - a)) - nu * coth(nu * z);
}

} // namespace

std::pair<double, double> slab_roots(double a, const Flux& flux) {
    check_interior_flux(flux);
    double nu = flux.reduced;
    auto f = [a, nu](double z) { return slab_defect(z, a, nu); };
    double eps_z = 1e-8 / nu;  // coth term dominates here, fixing the sign
    double hi = std::max(1.0, a) + 50.0;
    double lo = -(std::max(1.0, -a) + 50.0);
    double z2 = solve_bracketed(f, make_bracket(f, eps_z, hi));
    double z1 = solve_bracketed(f, make_bracket(f, lo, -eps_z));
    return {z1, z2};
}

SlabData slab_data(double a, const Flux& flux) {
    double nu = flux.reduced;
    auto [z1, z2] = slab_roots(a, flux);
    double c1 = std::cosh(z1 - a), c2 = std::cosh(z2 - a);
    double T = -coth(nu * z2) * c1 / (coth(nu * z1) * c2);
    double ratio = T * c2 / c1;
    // cosh(z1-a)/T collapses to -coth(nu*z1)*cosh(z2-a)/coth(nu*z2), which
    // stays bounded for large |a| where the raw cosh quotient overflows.
    double c1_over_T = -coth(nu * z1) * c2 / coth(nu * z2);
    double g = two_pi * nu * (c2 + c1_over_T) * coth(nu * z2) / c2;
    return SlabData{a, flux, z1, z2, T, ratio, g};
}

double z_prime(double a, const Flux& flux, SlabRoot which) {
    double nu = flux.reduced;
    auto [z1, z2] = slab_roots(a, flux);
    double z = (which == SlabRoot::z1) ? z1 : z2;
    double sh = std::sinh(nu * z);
    return 1.0 - nu * nu / ((1.0 - 2.0 * nu) * sh * sh);
}

SlabRobinRatios slab_robin_ratios(double a, const Flux& flux) {
    double nu = flux.reduced;
    auto [z1, z2] = slab_roots(a, flux);
    double c1 = std::cosh(z1 - a), c2 = std::cosh(z2 - a);
    return SlabRobinRatios{
        (1.0 - nu) * std::tanh((1.0 - nu) * (z2 - a)) / c2,
        nu * coth(nu * z2) / c2,
        -(1.0 - nu) * std::tanh((1.0 - nu) * (z1 - a)) / c1,
        -nu * coth(nu * z1) / c1,
    };
}

ScanVerdict g_monotonicity_scan(const Flux& flux, double a_max, int n) {
    check_interior_flux(flux);
    if (!(a_max > 0.0)) throw DomainError("a_max must be positive");
    if (n < 16) throw GridTooCoarse("scan needs at least 16 samples");
    ScanVerdict verdict{true, true, {}};
    verdict.samples.reserve(n + 1);
    double g0 = 0.0;
    for (int i = 0; i <= n; ++i) {
        double a = a_max * i / n;
        double g = slab_data(a, flux).g;
        if (i == 0) g0 = g;
        if (i > 0) {
            if (g >= verdict.samples.back().g) verdict.strictly_decreasing = false;
            if (g >= g0) verdict.max_at_zero = false;
        }
        verdict.samples.push_back({a, g});
    }
    return verdict;
}

} // namespace steklov
