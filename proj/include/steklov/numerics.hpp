#pragma once

#include <functional>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

// Default tolerances; the CLI may override these once at startup.
namespace tol {
inline double root = 1e-12;
inline double quad = 1e-11;
inline double ode = 1e-12;
} // namespace tol

// Stable hyperbolic cotangent, odd, valid away from 0.
double coth(double x);

// cosh/sinh with an argument guard (doubles overflow near 710).
double cosh_guarded(double x);
double sinh_guarded(double x);

struct Bracket {
    double lo, hi;
    double f_lo, f_hi;
};

// Evaluates f at both ends.
Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi);

// Brent's method. Requires f_lo * f_hi < 0.
double solve_bracketed(const std::function<double(double)>& f, Bracket bracket,
                       double rel_tol = tol::root);

struct QuadratureResult {
    double value;
    double abs_error_estimate;
    int evaluations;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = tol::quad);

struct Trajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> y;   // state at t[i]
    std::vector<std::vector<double>> dy;  // rhs at t[i]

    // Cubic Hermite dense output; t must lie in [t.front(), t.back()].
    std::vector<double> eval(double ti) const;
    std::vector<double> eval_derivative(double ti) const;
};

using Rhs = std::function<std::vector<double>(double, const std::vector<double>&)>;

// Embedded RK45 (Cash-Karp) with local error control per unit time.
Trajectory integrate_ode(const Rhs& rhs, std::vector<double> y0, double t0, double t1,
                         double step_tol = tol::ode);

// Two roots of det(K - sigma*B) = 0, ascending. K symmetric 2x2
// {k11, k12, k22}, B diagonal positive {b1, b2}.
std::pair<double, double> eig2_generalized(double k11, double k12, double k22,
                                           double b1, double b2);

} // namespace steklov
