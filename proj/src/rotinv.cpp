#include "steklov/rotinv.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "steklov/numerics.hpp"

namespace steklov {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_annulus(const RotInvAnnulus& annulus) {
    if (!(annulus.ratio > 0.0) || !std::isfinite(annulus.ratio))
        throw InvalidAnnulus("ratio must be positive");
    if (!(annulus.length > 0.0) || !std::isfinite(annulus.length))
        throw InvalidAnnulus("length must be positive");
}

double beta_of(const RotInvAnnulus& annulus, int k) {
    return std::fabs((double)k - annulus.flux.reduced);
}

// 1/sinh(x) for x > 0 without overflow.
double inv_sinh(double x) {
    if (x > 700.0) return 0.0;
    return 2.0 * std::exp(-x) / (-std::expm1(-2.0 * x));
}

} // namespace

ModePair branch_pair(const RotInvAnnulus& annulus, int k) {
    check_annulus(annulus);
    double A = annulus.ratio, Z = annulus.length;
    double beta = beta_of(annulus, k);
    if (beta == 0.0) {
        // phi'' = 0 degeneration: constant and affine profiles.
        return {0.0, (A + 1.0) / (A * Z)};
    }
    double s = 1.0 / A + 1.0;
    // e = coth(beta Z) - 1, computed without cancellation for large beta Z
    double e = 2.0 / std::expm1(2.0 * beta * Z);
    double d = (1.0 / A - 1.0) * (1.0 / A - 1.0) + s * s * e * (2.0 + e);
    double sigma2 = 0.5 * beta * (s * (1.0 + e) + std::sqrt(d));
    double sigma1 = beta * beta / (A * sigma2);
    return {sigma1, sigma2};
}

ModePair normalized_branch_pair(const RotInvAnnulus& annulus, int k) {
    ModePair p = branch_pair(annulus, k);
    double len = two_pi * (annulus.ratio + 1.0);
    return {len * p.sigma1, len * p.sigma2};
}

double crossing_length(double ratio, const Flux& flux) {
    double nu = flux.reduced;
    if (nu >= 0.5) throw FluxOutOfRange("crossing requires reduced flux below 1/2");
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw InvalidAnnulus("ratio must be positive");
    if (nu > 0.0) {
        // The upper k=0 branch tends to 2*pi*nu*(A+1)*max(1, 1/A) as Z grows,
        // so the crossing with the increasing k=1 branch exists only here.
        if (ratio <= nu / (1.0 - nu) || ratio >= (1.0 - nu) / nu)
            throw NoCrossing("ratio outside the crossing window for this flux");
    }
    auto diff = [&](double Z) {
        RotInvAnnulus a{ratio, Z, flux};
        return normalized_branch_pair(a, 1).sigma1 - normalized_branch_pair(a, 0).sigma2;
    };
    double lo = 1e-3, hi = 1.0;
    double f_lo = diff(lo), f_hi = diff(hi);
    int doublings = 0;
    while (f_lo * f_hi > 0.0) {
        if (++doublings > 60) throw NoCrossing("branches do not cross");
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = diff(hi);
    }
    return solve_bracketed(diff, Bracket{lo, hi, f_lo, f_hi});
}

DtnMatrix dtn_mode_matrix(const RotInvAnnulus& annulus, int k) {
    check_annulus(annulus);
    double beta = beta_of(annulus, k);
    if (beta == 0.0) throw DegenerateMode("DtN mode matrix requires |k - nu| > 0");
    double Z = annulus.length;
    double c = beta * coth(beta * Z);
    double s = -beta * inv_sinh(beta * Z);
    return DtnMatrix{c, s, c, annulus.ratio, 1.0};
}

ModePair dtn_mode_eigenvalues(const RotInvAnnulus& annulus, int k) {
    DtnMatrix m = dtn_mode_matrix(annulus, k);
    auto [s1, s2] = eig2_generalized(m.k11, m.k12, m.k22, m.b1, m.b2);
    return {s1, s2};
}

namespace {

// End-derivative mismatch of the shooting solution: march phi'' = beta^2 phi
// from t=0 with the weighted Robin condition imposed there, return
// phi'(Z) - sigma*phi(Z). Roots in sigma are the mode eigenvalues.
double shoot(double A, double Z, double beta, int n, double sigma) {
    double h = Z / n;
    double c = 2.0 + h * h * beta * beta;
    double prev = 1.0;
    double cur = 1.0 + h * (-sigma * A) + 0.5 * h * h * beta * beta;
    for (int i = 1; i < n; ++i) {
        double next = c * cur - prev;
        prev = cur;
        cur = next;
    }
    double dphi = (3.0 * cur - 4.0 * prev +
                   (c * prev - cur)) / (2.0 * h);  // phi_{n-2} = c*phi_{n-1} - phi_n
    return dphi - sigma * cur;
}

} // namespace

ModePair fd_mode_eigenvalues(const RotInvAnnulus& annulus, int k, int n) {
    check_annulus(annulus);
    if (n < 16) throw GridTooCoarse("grid must have at least 16 intervals");
    double A = annulus.ratio, Z = annulus.length;
    double beta = beta_of(annulus, k);
    double sigma_max = (beta > 0.0)
                           ? beta * (1.0 / A + 1.0) * coth(beta * Z) + 1.0
                           : 2.0 * (A + 1.0) / (A * Z) + 1.0;

    // Coarse scan for sign-change brackets, then bisection on the full grid.
    const int scan_points = 2000;
    int n_scan = std::min(n, 256);
    std::vector<std::pair<double, double>> brackets;
    double step = sigma_max / scan_points;
    double prev_sigma = -0.5 * step;  // start slightly below 0 to catch a root at 0
    double prev_w = shoot(A, Z, beta, n_scan, prev_sigma);
    for (int i = 1; i <= scan_points && brackets.size() < 2; ++i) {
        double sigma = prev_sigma + step;
        double w = shoot(A, Z, beta, n_scan, sigma);
        if (prev_w == 0.0 || prev_w * w < 0.0) brackets.emplace_back(prev_sigma, sigma);
        prev_sigma = sigma;
        prev_w = w;
    }
    if (brackets.size() < 2) throw GridTooCoarse("could not bracket two eigenvalues");

    double roots[2];
    for (int r = 0; r < 2; ++r) {
        double lo = brackets[r].first - 2.0 * step;
        double hi = brackets[r].second + 2.0 * step;
        double w_lo = shoot(A, Z, beta, n, lo);
        double w_hi = shoot(A, Z, beta, n, hi);
        int widen = 0;
        while (w_lo * w_hi > 0.0) {
            if (++widen > 20) throw GridTooCoarse("bracket lost on fine grid");
            lo -= step;
            hi += step;
            w_lo = shoot(A, Z, beta, n, lo);
            w_hi = shoot(A, Z, beta, n, hi);
        }
        for (int it = 0; it < 100; ++it) {
            double mid = 0.5 * (lo + hi);
            double w_mid = shoot(A, Z, beta, n, mid);
            if (w_lo * w_mid <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                w_lo = w_mid;
            }
        }
        roots[r] = 0.5 * (lo + hi);
    }
    return {roots[0], roots[1]};
}

ModePair fd_mode_eigenvalues_richardson(const RotInvAnnulus& annulus, int k, int n) {
    ModePair coarse = fd_mode_eigenvalues(annulus, k, n);
    ModePair fine = fd_mode_eigenvalues(annulus, k, 2 * n);
    return {(4.0 * fine.sigma1 - coarse.sigma1) / 3.0,
            (4.0 * fine.sigma2 - coarse.sigma2) / 3.0};
}

} // namespace steklov
