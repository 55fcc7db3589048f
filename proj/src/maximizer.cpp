#include "steklov/maximizer.hpp"

#include <cmath>
#include <numbers>

#include "steklov/numerics.hpp"

namespace steklov {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

void check_interior_flux(const Flux& flux) {
    if (!(flux.reduced > 0.0) || !(flux.reduced < 0.5))
        throw FluxOutOfRange("reduced flux must lie strictly between 0 and 1/2");
}

double defect(double nu, double M) {
    return (1.0 - nu) * std::tanh((1.0 - nu) * M) - nu * coth(nu * M);
}

double sech2(double x) {
    double c = std::cosh(x);
    return 1.0 / (c * c);
}

} // namespace

double m0() {
    auto f = [](double x) { return x * std::tanh(x) - 1.0; };
    return solve_bracketed(f, make_bracket(f, 1.0, 2.0));
}

double m0_alt() {
    auto f = [](double x) { return std::exp(2.0 * x) * (x - 1.0) - (x + 1.0); };
    return solve_bracketed(f, make_bracket(f, 1.0, 2.0));
}

double m_star(const Flux& flux) {
    check_interior_flux(flux);
    double nu = flux.reduced;
    auto f = [nu](double M) { return defect(nu, M); };
    double lo = 0.5, hi = 2.5;
    double f_lo = f(lo), f_hi = f(hi);
    int steps = 0;
    while (f_lo > 0.0) {
        if (++steps > 60) throw BracketExhausted("could not bracket M* from below");
        lo *= 0.5;
        f_lo = f(lo);
    }
    while (f_hi < 0.0) {
        if (++steps > 120) throw BracketExhausted("could not bracket M* from above");
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = f(hi);
    }
    return solve_bracketed(f, Bracket{lo, hi, f_lo, f_hi});
}

double m_star_derivative(const Flux& flux) {
    check_interior_flux(flux);
    double nu = flux.reduced;
    double M = m_star(flux);
    double sh = std::sinh(nu * M);
    double dF_dM = (1.0 - nu) * (1.0 - nu) * sech2((1.0 - nu) * M) +
                   nu * nu / (sh * sh);
    double dF_dnu = -std::tanh((1.0 - nu) * M) -
                    M * (1.0 - nu) * sech2((1.0 - nu) * M) -
                    coth(nu * M) + nu * M / (sh * sh);
    return -dF_dnu / dF_dM;
}

MaximizerResult sigma2_star(const Flux& flux) {
    check_interior_flux(flux);
    double nu = flux.reduced;
    double M = m_star(flux);
    double value = four_pi * nu * coth(nu * M);
    double residual = std::fabs(defect(nu, M));
    return MaximizerResult{flux, M, value, residual};
}

double sigma2_star_derivative(const Flux& flux) {
    check_interior_flux(flux);
    double nu = flux.reduced;
    double M = m_star(flux);
    double Mp = m_star_derivative(flux);
    double sh = std::sinh(nu * M);
    return four_pi * (coth(nu * M) - nu * (M + nu * Mp) / (sh * sh));
}

double sigma1_bound(double M, const Flux& flux) {
    if (!(M > 0.0) || !std::isfinite(M)) throw InvalidModulus("modulus must be positive");
    return four_pi * flux.reduced * std::tanh(flux.reduced * M);
}

std::vector<AsymptoticRow> sigma1_asymptotic_check(double M,
                                                   const std::vector<double>& nus) {
    if (!(M > 0.0) || !std::isfinite(M)) throw InvalidModulus("modulus must be positive");
    std::vector<AsymptoticRow> rows;
    rows.reserve(nus.size());
    for (double nu : nus) {
        if (!(nu > 0.0)) throw FluxOutOfRange("asymptotic check needs positive flux");
        rows.push_back({nu, four_pi * std::tanh(nu * M) / nu});
    }
    return rows;
}

double sigma2_half_flux(double M) {
    if (!(M > 0.0) || !std::isfinite(M)) throw InvalidModulus("modulus must be positive");
    return 2.0 * std::numbers::pi * std::tanh(0.5 * M);
}

} // namespace steklov
