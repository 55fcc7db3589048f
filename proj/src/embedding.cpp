#include "steklov/embedding.hpp"

#include <cmath>

#include "steklov/maximizer.hpp"
#include "steklov/numerics.hpp"

namespace steklov {

namespace {

struct Context {
    double nu;
    double M_star;
    double a;
};

Context make_context(const Flux& flux) {
    double M = m_star(flux);  // validates the flux range
    double nu = flux.reduced;
    double ch = std::cosh((1.0 - nu) * M);
    double sh = std::sinh(nu * M);
    double a = 1.0 / std::sqrt(ch * ch / ((1.0 - nu) * (1.0 - nu)) + sh * sh / (nu * nu));
    return Context{nu, M, a};
}

void check_range(const Context& ctx, double t) {
    if (std::fabs(t) > ctx.M_star * (1.0 + 1e-12))
        throw OutOfRange("t outside [-M*, M*]");
}

} // namespace

double normalization_constant(const Flux& flux) {
    return make_context(flux).a;
}

double conformal_factor(const Flux& flux, double t) {
    Context ctx = make_context(flux);
    check_range(ctx, t);
    double s1 = std::sinh((1.0 - ctx.nu) * t);
    double c2 = std::cosh(ctx.nu * t);
    return ctx.a * ctx.a * (s1 * s1 + c2 * c2);
}

double conformal_factor_alt(const Flux& flux, double t) {
    Context ctx = make_context(flux);
    check_range(ctx, t);
    double c1 = std::cosh((1.0 - ctx.nu) * t);
    double s2 = std::sinh(ctx.nu * t);
    return ctx.a * ctx.a * (c1 * c1 + s2 * s2);
}

double free_boundary_inner_product(const Flux& flux, double t) {
    Context ctx = make_context(flux);
    check_range(ctx, t);
    double nu = ctx.nu;
    return ctx.a * ctx.a / (nu * (1.0 - nu)) *
           (-nu * std::cosh((1.0 - nu) * t) * std::cosh(nu * t) +
            (1.0 - nu) * std::sinh(nu * t) * std::sinh((1.0 - nu) * t));
}

MetricComponents metric_components(const Flux& flux, double t) {
    Context ctx = make_context(flux);
    check_range(ctx, t);
    double s1 = std::sinh((1.0 - ctx.nu) * t);
    double c2 = std::cosh(ctx.nu * t);
    double c1 = std::cosh((1.0 - ctx.nu) * t);
    double s2 = std::sinh(ctx.nu * t);
    double g11 = ctx.a * ctx.a * (s1 * s1 + c2 * c2);
    // same quantity through the other displayed form (cosh^2 - sinh^2 = 1
    // applied twice)
    double g22 = ctx.a * ctx.a * (c1 * c1 + s2 * s2);
    return MetricComponents{g11, g22, 0.0};
}

double boundary_norm_squared(const Flux& flux, double t) {
    Context ctx = make_context(flux);
    check_range(ctx, t);
    double nu = ctx.nu;
    double u1 = ctx.a / (1.0 - nu) * std::cosh((1.0 - nu) * t);
    double u2 = ctx.a / nu * std::sinh(nu * t);
    return u1 * u1 + u2 * u2;
}

EmbeddingData make_embedding(const Flux& flux, int n_samples) {
    if (n_samples < 2) throw DomainError("need at least 2 samples");
    Context ctx = make_context(flux);
    EmbeddingData out;
    out.flux = flux;
    out.M_star = ctx.M_star;
    out.a_norm = ctx.a;
    out.sigma_crossing = ctx.nu * coth(ctx.nu * ctx.M_star);
    out.samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        double t = -ctx.M_star + 2.0 * ctx.M_star * i / (n_samples - 1);
        double u1 = ctx.a / (1.0 - ctx.nu) * std::cosh((1.0 - ctx.nu) * t);
        double u2 = ctx.a / ctx.nu * std::sinh(ctx.nu * t);
        out.samples.push_back({t, u1, u2, conformal_factor(flux, t),
                               free_boundary_inner_product(flux, t)});
    }
    return out;
}

} // namespace steklov
