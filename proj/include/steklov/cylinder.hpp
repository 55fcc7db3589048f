#pragma once

#include <vector>

#include "steklov/flux.hpp"

namespace steklov {

enum class Family { TanhType, CothType };

struct EigenBranch {
    Family family;
    int k;
    double value;
    double normalized;  // 4*pi*value, boundary length of the flat annulus
};

struct SpectrumEntry {
    EigenBranch branch;
    int index;         // 1-based spectral index
    int multiplicity;
};

struct SortedSpectrum {
    std::vector<SpectrumEntry> entries;
};

// Branch values of the flat annulus [-M, M] x S^1.
EigenBranch branch_value(double M, const Flux& flux, int k, Family family);
EigenBranch first_eigenvalue(double M, const Flux& flux);
EigenBranch second_eigenvalue(double M, const Flux& flux);
SortedSpectrum sorted_spectrum(double M, const Flux& flux, int count);

} // namespace steklov
