#pragma once

#include <vector>

#include "steklov/flux.hpp"

namespace steklov {

struct MaximizerResult {
    Flux flux;
    double M_star;
    double sigma2_star_normalized;
    double residual;  // |(1-nu)tanh((1-nu)M*) - nu coth(nu M*)|
};

struct AsymptoticRow {
    double nu;
    double ratio;  // normalized first eigenvalue divided by nu^2
};

// Root of x*tanh(x) = 1, two independent routes.
double m0();
double m0_alt();

// Root of (1-nu)tanh((1-nu)M) = nu*coth(nu*M), reduced flux in (0, 1/2).
double m_star(const Flux& flux);
double m_star_derivative(const Flux& flux);

// Maximal second normalized eigenvalue 4*pi*nu*coth(nu*M*(nu)).
MaximizerResult sigma2_star(const Flux& flux);
double sigma2_star_derivative(const Flux& flux);

// Sharp first-eigenvalue bound 4*pi*nu*tanh(nu*M) at conformal modulus M.
double sigma1_bound(double M, const Flux& flux);

// Small-flux asymptotics: normalized first eigenvalue over nu^2 tends to
// 4*pi*M.
std::vector<AsymptoticRow> sigma1_asymptotic_check(double M,
                                                   const std::vector<double>& nus);

// Second normalized eigenvalue at half flux: 2*pi*tanh(M/2).
double sigma2_half_flux(double M);

} // namespace steklov
