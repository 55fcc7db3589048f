#include "steklov/alpha_surface.hpp"

#include <cmath>
#include <numbers>

namespace steklov {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

void check_positive_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("alpha must be positive");
}

// rho^(2 alpha) - 1, nonnegative for rho >= 1, alpha > 0.
double pow2a_m1(double rho, double alpha) {
    return std::expm1(2.0 * alpha * std::log(rho));
}

} // namespace

AlphaProfile profile(double alpha, double t_end, double tol) {
    if (alpha == 0.0) throw DomainError("alpha must be nonzero");
    if (!(t_end > 0.0)) throw DomainError("t_end must be positive");
    Rhs rhs = [alpha](double, const std::vector<double>& y) {
        return std::vector<double>{y[1], alpha * (1.0 + y[1] * y[1]) / y[0]};
    };
    return AlphaProfile{alpha, integrate_ode(rhs, {1.0, 0.0}, 0.0, t_end, tol)};
}

double first_integral_residual(const AlphaProfile& profile) {
    check_positive_alpha(profile.alpha);
    double worst = 0.0;
    const auto& ts = profile.traj.t;
    for (size_t i = 0; i < ts.size(); ++i) {
        double samples[2] = {ts[i], i + 1 < ts.size() ? 0.5 * (ts[i] + ts[i + 1]) : ts[i]};
        for (double t : samples) {
            auto y = profile.traj.eval(t);
            double expect = std::sqrt(std::max(0.0, pow2a_m1(y[0], profile.alpha)));
            worst = std::max(worst, std::fabs(y[1] - expect));
        }
    }
    return worst;
}

double phi(double alpha, double r) {
    check_positive_alpha(alpha);
    if (!(r > 1.0)) throw DomainError("phi requires r > 1");
    // x = 1 + s^2 regularizes the inverse-sqrt endpoint; the integrand
    // extends continuously to 2/sqrt(2 alpha) at s = 0.
    auto integrand = [alpha](double s) {
        double u = std::expm1(2.0 * alpha * std::log1p(s * s));
        if (u <= 0.0) return 2.0 / std::sqrt(2.0 * alpha);
        return 2.0 * s / std::sqrt(u);
    };
    return integrate(integrand, 0.0, std::sqrt(r - 1.0)).value;
}

AlphaSurfaceData free_boundary_radius(double alpha) {
    check_positive_alpha(alpha);
    auto G = [alpha](double r) {
        return r / std::sqrt(pow2a_m1(r, alpha)) - phi(alpha, r);
    };
    double lo = 1.0 + 1e-6;
    for (int shrink = 0; G(lo) < 0.0; ++shrink) {
        if (shrink > 4) throw BracketExhausted("could not bracket R from below");
        lo = 1.0 + (lo - 1.0) / 100.0;
    }
    double hi = 2.0;
    int doublings = 0;
    while (G(hi) > 0.0) {
        if (++doublings > 60) throw BracketExhausted("could not bracket R from above");
        hi *= 2.0;
    }
    if (hi / 2.0 > lo && doublings > 0) lo = hi / 2.0;
    double R = solve_bracketed(G, make_bracket(G, lo, hi));
    double T = phi(alpha, R);
    double s = 1.0 / std::sqrt(R * R + T * T);
    double u = std::exp(-2.0 * alpha * std::log(R));  // R^(-2 alpha)
    double x = std::sqrt(-std::expm1(-2.0 * alpha * std::log(R)));
    // artanh(sqrt(1-u)) = log((1 + sqrt(1-u))^2 / u) / 2, stable for small u.
    double modulus = std::log((1.0 + x) * (1.0 + x) / u) / (2.0 * alpha);
    return AlphaSurfaceData{alpha, R, T, s, R * s, T * s, modulus};
}

double modulus_of_alpha(double alpha) {
    return free_boundary_radius(alpha).modulus;
}

double alpha_of_modulus(double M) {
    if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("modulus must be positive");
    auto f = [M](double alpha) { return modulus_of_alpha(alpha) - M; };
    double lo = 1.0, hi = 1.0;
    int steps = 0;
    if (f(1.0) > 0.0) {
        do {
            if (++steps > 60) throw BracketExhausted("modulus outside representable range");
            hi *= 2.0;
        } while (f(hi) > 0.0);
        lo = hi / 2.0;
    } else {
        do {
            if (++steps > 60) throw BracketExhausted("modulus outside representable range");
            lo *= 0.5;
        } while (f(lo) < 0.0);
        hi = lo * 2.0;
    }
    return solve_bracketed(f, make_bracket(f, lo, hi));
}

Curvatures curvatures_at(double rho, double rho_p, double rho_pp) {
    double q = std::sqrt(1.0 + rho_p * rho_p);
    return Curvatures{-rho_pp / (q * q * q), 1.0 / (rho * q)};
}

Curvatures curvatures(const AlphaProfile& profile, double t) {
    auto y = profile.traj.eval(t);
    double rho_pp = profile.alpha * (1.0 + y[1] * y[1]) / y[0];
    return curvatures_at(y[0], y[1], rho_pp);
}

double weighted_mean_curvature_at(double alpha, double rho, double rho_p, double rho_pp) {
    Curvatures c = curvatures_at(rho, rho_p, rho_pp);
    double q = std::sqrt(1.0 + rho_p * rho_p);
    return (c.kappa1 + c.kappa2) - (1.0 - alpha) / (rho * q);
}

double weighted_mean_curvature_residual(const AlphaProfile& profile, double t) {
    auto y = profile.traj.eval(t);
    double rho_pp = profile.alpha * (1.0 + y[1] * y[1]) / y[0];
    return weighted_mean_curvature_at(profile.alpha, y[0], y[1], rho_pp);
}

double magnetic_harmonicity_at(double alpha, double rho, double rho_p, double rho_pp) {
    // u = rho^alpha; flux term alpha^2 u / rho^2; radial part
    // -(1/(rho q)) d/dt( rho u' / q ), all derivatives by chain rule.
    double q = std::sqrt(1.0 + rho_p * rho_p);
    double ra = std::pow(rho, alpha);
    double w_prime = alpha * ((alpha * std::pow(rho, alpha - 1.0) * rho_p * rho_p +
                               ra * rho_pp) / q -
                              ra * rho_p * rho_p * rho_pp / (q * q * q));
    return -w_prime / (rho * q) + alpha * alpha * std::pow(rho, alpha - 2.0);
}

double magnetic_harmonicity_residual(const AlphaProfile& profile, double t) {
    auto y = profile.traj.eval(t);
    double rho_pp = profile.alpha * (1.0 + y[1] * y[1]) / y[0];
    return magnetic_harmonicity_at(profile.alpha, y[0], y[1], rho_pp);
}

BoundaryIdentity steklov_boundary_identity(const AlphaSurfaceData& data) {
    double alpha = data.alpha, R = data.R;
    double x = std::sqrt(-std::expm1(-2.0 * alpha * std::log(R)));
    double unscaled = alpha * x / R;
    double critical = unscaled / data.ball_scale;
    return BoundaryIdentity{unscaled, critical, four_pi * alpha * x,
                            std::fabs(critical - alpha)};
}

} // namespace steklov
