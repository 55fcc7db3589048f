#include "steklov/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace steklov {

double coth(double x) {
    if (x == 0.0) throw DomainError("coth undefined at 0");
    if (x < 0.0) return -coth(-x);
    if (x > 350.0) return 1.0;
    return 1.0 + 2.0 / std::expm1(2.0 * x);
}

double cosh_guarded(double x) {
    if (std::fabs(x) > 700.0) throw Blowup("cosh argument exceeds overflow guard");
    return std::cosh(x);
}

double sinh_guarded(double x) {
    if (std::fabs(x) > 700.0) throw Blowup("sinh argument exceeds overflow guard");
    return std::sinh(x);
}

Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi) {
    return Bracket{lo, hi, f(lo), f(hi)};
}

double solve_bracketed(const std::function<double(double)>& f, Bracket br, double rel_tol) {
    if (rel_tol <= 0.0) throw DomainError("rel_tol must be positive");
    double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
    if (!(a < b)) throw NoSignChange("bracket not ordered");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw NoSignChange("no sign change over bracket");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 0.5 * rel_tol * std::max(1.0, std::fabs(b));
        double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double r = fb / fc;
                double t = fa / fc;
                p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
                q = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    throw MaxIterations("root tolerance unreachable in 200 iterations");
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
const double gk_node[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
const double gk_wk[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
const double gk_wg[8] = {
    0.417959183673469, 0.0, 0.381830050505119, 0.0,
    0.279705391489277, 0.0, 0.129484966168870, 0.0};

double gk15(const std::function<double(double)>& f, double a, double b, double& err) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double y0 = f(mid);
    double k15 = gk_wk[0] * y0;
    double g7 = gk_wg[0] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = half * gk_node[i];
        double yi = f(mid + dx) + f(mid - dx);
        k15 += gk_wk[i] * yi;
        g7 += gk_wg[i] * yi;
    }
    k15 *= half;
    g7 *= half;
    err = std::fabs(k15 - g7);
    err = 200.0 * err * std::sqrt(std::max(err, 0.0));
    return k15;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) {
    if (!(a < b)) throw DomainError("integrate requires a < b");
    struct Interval { double a, b, value, err; };
    std::vector<Interval> stack;
    const int max_intervals = 4000;
    int evals = 15;
    double err0;
    double v0 = gk15(f, a, b, err0);
    stack.push_back({a, b, v0, err0});
    double total_err = err0;
    while (total_err > abs_tol) {
        auto worst = std::max_element(stack.begin(), stack.end(),
                                      [](const Interval& x, const Interval& y) {
                                          return x.err < y.err;
                                      });
        if ((int)stack.size() + 1 > max_intervals)
            throw MaxSubdivisions("quadrature tolerance not met");
        Interval iv = *worst;
        stack.erase(worst);
        double mid = 0.5 * (iv.a + iv.b);
        double e1, e2;
        double v1 = gk15(f, iv.a, mid, e1);
        double v2 = gk15(f, mid, iv.b, e2);
        evals += 30;
        stack.push_back({iv.a, mid, v1, e1});
        stack.push_back({mid, iv.b, v2, e2});
        total_err = 0.0;
        for (const auto& s : stack) total_err += s.err;
    }
    double sum = 0.0;
    for (const auto& s : stack) sum += s.value;
    return {sum, total_err, evals};
}

namespace {

int find_segment(const std::vector<double>& ts, double t) {
    if (t < ts.front() - 1e-12 || t > ts.back() + 1e-12)
        throw OutOfRange("dense output query outside trajectory span");
    t = std::clamp(t, ts.front(), ts.back());
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    int i = (int)(it - ts.begin()) - 1;
    return std::clamp(i, 0, (int)ts.size() - 2);
}

} // namespace

std::vector<double> Trajectory::eval(double ti) const {
    int i = find_segment(t, ti);
    double h = t[i + 1] - t[i];
    double s = (std::clamp(ti, t.front(), t.back()) - t[i]) / h;
    double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    double h10 = s * (1 - s) * (1 - s);
    double h01 = s * s * (3 - 2 * s);
    double h11 = s * s * (s - 1);
    std::vector<double> out(y[i].size());
    for (size_t j = 0; j < out.size(); ++j)
        out[j] = h00 * y[i][j] + h10 * h * dy[i][j] + h01 * y[i + 1][j] + h11 * h * dy[i + 1][j];
    return out;
}

std::vector<double> Trajectory::eval_derivative(double ti) const {
    int i = find_segment(t, ti);
    double h = t[i + 1] - t[i];
    double s = (std::clamp(ti, t.front(), t.back()) - t[i]) / h;
    double d00 = 6 * s * (s - 1) / h;
    double d10 = (1 - s) * (1 - 3 * s);
    double d01 = -d00;
    double d11 = s * (3 * s - 2);
    std::vector<double> out(y[i].size());
    for (size_t j = 0; j < out.size(); ++j)
        out[j] = d00 * y[i][j] + d10 * dy[i][j] + d01 * y[i + 1][j] + d11 * dy[i + 1][j];
    return out;
}

namespace {

// Cash-Karp 4(5) tableau.
const double ck_a[6] = {0.0, 1.0 / 5, 3.0 / 10, 3.0 / 5, 1.0, 7.0 / 8};
const double ck_b[6][5] = {
    {0, 0, 0, 0, 0},
    {1.0 / 5, 0, 0, 0, 0},
    {3.0 / 40, 9.0 / 40, 0, 0, 0},
    {3.0 / 10, -9.0 / 10, 6.0 / 5, 0, 0},
    {-11.0 / 54, 5.0 / 2, -70.0 / 27, 35.0 / 27, 0},
    {1631.0 / 55296, 175.0 / 512, 575.0 / 13824, 44275.0 / 110592, 253.0 / 4096}};
const double ck_c5[6] = {37.0 / 378, 0, 250.0 / 621, 125.0 / 594, 0, 512.0 / 1771};
const double ck_c4[6] = {2825.0 / 27648, 0, 18575.0 / 48384, 13525.0 / 55296,
                         277.0 / 14336, 1.0 / 4};

} // namespace

Trajectory integrate_ode(const Rhs& rhs, std::vector<double> y0, double t0, double t1,
                         double step_tol) {
    if (!(t0 < t1)) throw DomainError("integrate_ode requires t0 < t1");
    const size_t dim = y0.size();
    const double overflow = 1e150;

    Trajectory traj;
    double t = t0;
    std::vector<double> y = y0;
    std::vector<double> f0 = rhs(t, y);
    traj.t.push_back(t);
    traj.y.push_back(y);
    traj.dy.push_back(f0);

    double h = (t1 - t0) / 100.0;
    // Cap the step so cubic Hermite dense output stays at the step_tol
    // accuracy level between nodes.
    const double h_max = (t1 - t0) / 64.0;
    const double h_min = (t1 - t0) * 1e-14;
    std::vector<std::vector<double>> k(6, std::vector<double>(dim));
    std::vector<double> ytmp(dim), y5(dim), y4(dim);

    while (t < t1) {
        if (h < h_min) throw MaxIterations("ODE step size underflow");
        if (t + h > t1) h = t1 - t;
        k[0] = f0;
        bool bad = false;
        for (int s = 1; s < 6 && !bad; ++s) {
            for (size_t j = 0; j < dim; ++j) {
                double acc = 0.0;
                for (int m = 0; m < s; ++m) acc += ck_b[s][m] * k[m][j];
                ytmp[j] = y[j] + h * acc;
                if (!std::isfinite(ytmp[j])) bad = true;
            }
            if (!bad) k[s] = rhs(t + ck_a[s] * h, ytmp);
        }
        double err = 0.0;
        if (!bad) {
            for (size_t j = 0; j < dim; ++j) {
                double acc5 = 0.0, acc4 = 0.0;
                for (int s = 0; s < 6; ++s) {
                    acc5 += ck_c5[s] * k[s][j];
                    acc4 += ck_c4[s] * k[s][j];
                }
                y5[j] = y[j] + h * acc5;
                y4[j] = y[j] + h * acc4;
                err = std::max(err, std::fabs(y5[j] - y4[j]));
                if (!std::isfinite(y5[j])) bad = true;
            }
        }
        double tol_step = step_tol * h;
        if (bad || err > tol_step) {
            double shrink = bad ? 0.2 : std::max(0.2, 0.9 * std::pow(tol_step / err, 0.25));
            h *= shrink;
            continue;
        }
        t += h;
        y = y5;
        for (size_t j = 0; j < dim; ++j)
            if (std::fabs(y[j]) > overflow) throw Blowup("ODE state exceeds overflow guard");
        f0 = rhs(t, y);
        traj.t.push_back(t);
        traj.y.push_back(y);
        traj.dy.push_back(f0);
        double grow = (err > 0.0) ? std::min(5.0, 0.9 * std::pow(tol_step / err, 0.2)) : 5.0;
        h = std::min(h * grow, h_max);
    }
    return traj;
}

std::pair<double, double> eig2_generalized(double k11, double k12, double k22,
                                           double b1, double b2) {
    if (!(b1 > 0.0) || !(b2 > 0.0)) throw DomainError("B must have positive diagonal");
    // det(K - sB) = b1*b2*s^2 - (k11*b2 + k22*b1)*s + (k11*k22 - k12^2)
    double a = b1 * b2;
    double b = -(k11 * b2 + k22 * b1);
    double c = k11 * k22 - k12 * k12;
    double disc = b * b - 4.0 * a * c;
    disc = std::max(disc, 0.0);
    double sq = std::sqrt(disc);
    double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    double r1, r2;
    if (q != 0.0) {
        r1 = q / a;
        r2 = (c != 0.0) ? c / q : 0.0;
    } else {
        r1 = r2 = 0.0;
    }
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

} // namespace steklov
