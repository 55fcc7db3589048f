#include "steklov/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/numerics.hpp"

namespace steklov {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

void check_modulus(double M) {
    if (!(M > 0.0) || !std::isfinite(M)) throw InvalidModulus("modulus must be positive");
}

bool branch_less(const EigenBranch& a, const EigenBranch& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.family != b.family) return a.family == Family::TanhType;
    return a.k < b.k;
}

} // namespace

EigenBranch branch_value(double M, const Flux& flux, int k, Family family) {
    check_modulus(M);
    double beta = std::fabs((double)k - flux.reduced);
    double value;
    if (beta == 0.0) {
        value = (family == Family::TanhType) ? 0.0 : 1.0 / M;
    } else if (family == Family::TanhType) {
        value = beta * std::tanh(beta * M);
    } else {
        value = beta * coth(beta * M);
    }
    return EigenBranch{family, k, value, four_pi * value};
}

EigenBranch first_eigenvalue(double M, const Flux& flux) {
    return branch_value(M, flux, 0, Family::TanhType);
}

EigenBranch second_eigenvalue(double M, const Flux& flux) {
    EigenBranch tanh1 = branch_value(M, flux, 1, Family::TanhType);
    EigenBranch coth0 = branch_value(M, flux, 0, Family::CothType);
    return branch_less(tanh1, coth0) ? tanh1 : coth0;
}

SortedSpectrum sorted_spectrum(double M, const Flux& flux, int count) {
    check_modulus(M);
    if (count < 1) throw DomainError("count must be at least 1");
    double nu = flux.reduced;

    int K = count + 2;
    std::vector<EigenBranch> candidates;
    for (;;) {
        candidates.clear();
        for (int k = -K; k <= K; ++k) {
            candidates.push_back(branch_value(M, flux, k, Family::TanhType));
            candidates.push_back(branch_value(M, flux, k, Family::CothType));
        }
        std::sort(candidates.begin(), candidates.end(), branch_less);
        double nth = candidates[count - 1].value;
        // Every excluded mode has |k - nu| >= K + 1 - nu and value above the
        // tanh-branch lower bound, so once that bound clears the n-th
        // candidate the window is certified.
        double beta_excluded = (double)(K + 1) - nu;
        double excluded_lower = beta_excluded * std::tanh(beta_excluded * M);
        if (excluded_lower > nth) break;
        K += 4;
    }

    SortedSpectrum out;
    const double mult_tol = 1e-12;
    size_t i = 0;
    while (i < candidates.size() && (int)out.entries.size() < count) {
        size_t j = i;
        while (j + 1 < candidates.size() &&
               std::fabs(candidates[j + 1].value - candidates[i].value) <=
                   mult_tol * std::max(1.0, std::fabs(candidates[i].value)))
            ++j;
        int mult = (int)(j - i + 1);
        for (size_t m = i; m <= j && (int)out.entries.size() < count; ++m)
            out.entries.push_back({candidates[m], (int)out.entries.size() + 1, mult});
        i = j + 1;
    }
    return out;
}

} // namespace steklov
