#include "steklov/weighted_planar.hpp"

#include <cmath>
#include <numbers>

namespace steklov {

namespace {

void check(const WeightedAnnulus& annulus) {
    if (!(annulus.r0 > 0.0) || !(annulus.r0 < 1.0))
        throw InvalidRadius("inner radius must lie in (0, 1)");
    if (!(annulus.flux.reduced > 0.0) || !(annulus.flux.reduced <= 0.5))
        throw FluxOutOfRange("reduced flux must lie in (0, 1/2]");
}

} // namespace

std::pair<double, double> radial_eigenvalues(const WeightedAnnulus& annulus) {
    check(annulus);
    double nu = annulus.flux.reduced;
    double p = std::pow(annulus.r0, nu);
    return {nu * (1.0 - p) / (1.0 + p), nu * (1.0 + p) / (1.0 - p)};
}

std::array<std::array<double, 2>, 2> determinant_matrix(const WeightedAnnulus& annulus,
                                                        double sigma) {
    check(annulus);
    double nu = annulus.flux.reduced;
    double r0 = annulus.r0;
    // Rows: Robin condition u'(1) = sigma*u(1) on u = a*r^nu + b*r^-nu,
    // and -u'(r0) = (sigma/r0)*u(r0).
    return {{{nu - sigma, -nu - sigma},
             {(sigma + nu) * std::pow(r0, nu - 1.0),
              (sigma - nu) * std::pow(r0, -nu - 1.0)}}};
}

double matching_determinant(const WeightedAnnulus& annulus, double sigma) {
    auto m = determinant_matrix(annulus, sigma);
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

double normalized_first(const WeightedAnnulus& annulus) {
    return 4.0 * std::numbers::pi * radial_eigenvalues(annulus).first;
}

} // namespace steklov
