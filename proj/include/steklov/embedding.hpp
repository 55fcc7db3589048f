#pragma once

#include <vector>

#include "steklov/flux.hpp"

namespace steklov {

struct EmbeddingSample {
    double t;
    double u1_modulus;
    double u2;
    double psi;
    double inner_product;  // <F, U>
};

struct MetricComponents {
    double g11, g22, g12;
};

// Maximizing eigenfunction pair on the optimal flat annulus at flux nu:
// u1 = (a/(1-nu)) cosh((1-nu)t) e^{i theta}, u2 = (a/nu) sinh(nu t),
// normalized so the boundary lands on the unit sphere.
struct EmbeddingData {
    Flux flux;
    double M_star;
    double a_norm;
    double sigma_crossing;  // cylinder-side eigenvalue nu*coth(nu*M*)
    std::vector<EmbeddingSample> samples;
};

double normalization_constant(const Flux& flux);
double conformal_factor(const Flux& flux, double t);
double conformal_factor_alt(const Flux& flux, double t);
double free_boundary_inner_product(const Flux& flux, double t);
MetricComponents metric_components(const Flux& flux, double t);
double boundary_norm_squared(const Flux& flux, double t);
EmbeddingData make_embedding(const Flux& flux, int n_samples);

} // namespace steklov
