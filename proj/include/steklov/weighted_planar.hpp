#pragma once

#include <array>
#include <utility>

#include "steklov/flux.hpp"

namespace steklov {

// Concentric planar annulus r0 < |x| < 1 with boundary weight 1 outside
// and 1/r0 inside; radial magnetic Steklov mode.
struct WeightedAnnulus {
    double r0;  // in (0, 1)
    Flux flux;  // reduced in (0, 1/2]
};

std::pair<double, double> radial_eigenvalues(const WeightedAnnulus& annulus);

// Matrix (from the Robin conditions on a*r^nu + b*r^-nu) whose determinant
// vanishes exactly at the two radial eigenvalues.
std::array<std::array<double, 2>, 2> determinant_matrix(const WeightedAnnulus& annulus,
                                                        double sigma);
double matching_determinant(const WeightedAnnulus& annulus, double sigma);

double normalized_first(const WeightedAnnulus& annulus);

} // namespace steklov
