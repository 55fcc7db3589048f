#pragma once

#include <utility>
#include <vector>

#include "steklov/flux.hpp"

namespace steklov {

// Off-center catenoid slab: boundary circles at the two roots z1 < 0 < z2
// of F(z) = (1-nu)tanh((1-nu)(z-a)) - nu*coth(nu*z).
struct SlabData {
    double a;
    Flux flux;
    double z1;
    double z2;
    double T;      // rescale factor matching the two eigenfunction families
    double ratio;  // boundary-length ratio A(a)
    double g;      // normalized second eigenvalue at that ratio
};

enum class SlabRoot { z1, z2 };

struct SlabRobinRatios {
    double u1_at_z2, u2_at_z2;  // both equal the eigenvalue of the slab
    double u1_at_z1, u2_at_z1;
};

struct ScanSample {
    double a;
    double g;
};

struct ScanVerdict {
    bool strictly_decreasing;
    bool max_at_zero;
    std::vector<ScanSample> samples;
};

std::pair<double, double> slab_roots(double a, const Flux& flux);
SlabData slab_data(double a, const Flux& flux);
double z_prime(double a, const Flux& flux, SlabRoot which);
SlabRobinRatios slab_robin_ratios(double a, const Flux& flux);
ScanVerdict g_monotonicity_scan(const Flux& flux, double a_max, int n);

} // namespace steklov
