#pragma once

#include "steklov/numerics.hpp"

namespace steklov {

// Rotation-surface profile solving rho*rho'' = alpha*(1 + rho'^2),
// rho(0) = 1, rho'(0) = 0.
struct AlphaProfile {
    double alpha;
    Trajectory traj;  // state (rho, rho')

    double rho(double t) const { return traj.eval(t)[0]; }
    double rho_p(double t) const { return traj.eval(t)[1]; }
    double t_end() const { return traj.t.back(); }
};

// Free-boundary slice data. T is the slice height, R the profile radius at
// the boundary (Appendix-style convention: height T, radius R).
struct AlphaSurfaceData {
    double alpha;
    double R;
    double T;
    double ball_scale;  // s = 1/sqrt(R^2 + T^2)
    double R_c;         // R*s, boundary radius on the unit ball
    double T_c;         // T*s
    double modulus;     // conformal modulus M(alpha)
};

struct Curvatures {
    double kappa1;
    double kappa2;
};

struct BoundaryIdentity {
    double eigenvalue_unscaled;   // (alpha/R)*sqrt(1 - R^(-2 alpha))
    double eigenvalue_critical;   // unscaled / ball_scale; equals alpha
    double normalized;            // 4*pi*alpha*sqrt(1 - R^(-2 alpha))
    double residual;              // |eigenvalue_critical - alpha|
};

AlphaProfile profile(double alpha, double t_end, double tol = tol::ode);

// Sup-norm defect of rho' = sqrt(rho^(2 alpha) - 1) over the samples
// (alpha > 0 branch).
double first_integral_residual(const AlphaProfile& profile);

// Inverse of the profile: phi(alpha, rho(t)) = t, alpha > 0, r > 1.
double phi(double alpha, double r);

AlphaSurfaceData free_boundary_radius(double alpha);
double modulus_of_alpha(double alpha);
double alpha_of_modulus(double M);

Curvatures curvatures(const AlphaProfile& profile, double t);
Curvatures curvatures_at(double rho, double rho_p, double rho_pp);

double weighted_mean_curvature_residual(const AlphaProfile& profile, double t);
double weighted_mean_curvature_at(double alpha, double rho, double rho_p, double rho_pp);

double magnetic_harmonicity_residual(const AlphaProfile& profile, double t);
double magnetic_harmonicity_at(double alpha, double rho, double rho_p, double rho_pp);

BoundaryIdentity steklov_boundary_identity(const AlphaSurfaceData& data);

} // namespace steklov
