#pragma once

#include <utility>

#include "steklov/flux.hpp"

namespace steklov {

// Rotationally invariant annulus up to sigma-homothety: boundary weights
// f(0) = A (ratio), f(Z) = 1, flat length Z.
struct RotInvAnnulus {
    double ratio;   // A > 0
    double length;  // Z > 0
    Flux flux;
};

struct ModePair {
    double sigma1;
    double sigma2;
};

// Closed-form branch pair for mode k; beta = |k - nu|.
ModePair branch_pair(const RotInvAnnulus& annulus, int k);

// Normalized pair: multiply by the boundary length 2*pi*(A+1).
ModePair normalized_branch_pair(const RotInvAnnulus& annulus, int k);

// Unique Z where the normalized k=1 lower branch crosses the k=0 upper
// branch. Exists iff A lies in (nu/(1-nu), (1-nu)/nu); always for nu = 0.
double crossing_length(double ratio, const Flux& flux);

struct DtnMatrix {
    double k11, k12, k22;  // symmetric mode matrix
    double b1, b2;         // diagonal boundary weights
};

// Independent oracle: per-mode Dirichlet-to-Neumann matrix whose
// generalized eigenvalues are branch_pair.
DtnMatrix dtn_mode_matrix(const RotInvAnnulus& annulus, int k);
ModePair dtn_mode_eigenvalues(const RotInvAnnulus& annulus, int k);

// Second independent oracle: finite-difference shooting for the mode ODE
// phi'' = beta^2 phi with weighted Steklov boundary conditions.
ModePair fd_mode_eigenvalues(const RotInvAnnulus& annulus, int k, int n);

// Richardson extrapolation of the FD oracle from grids n and 2n.
ModePair fd_mode_eigenvalues_richardson(const RotInvAnnulus& annulus, int k, int n);

} // namespace steklov
