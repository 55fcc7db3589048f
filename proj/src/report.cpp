#include "steklov/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "steklov/alpha_surface.hpp"
#include "steklov/errors.hpp"

namespace steklov {

std::string format_double(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

namespace {

const char* family_name(Family f) {
    return f == Family::TanhType ? "tanh" : "coth";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& csv) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        if (!row.empty()) rows.push_back(row);
    }
    return rows;
}

} // namespace

std::string spectrum_csv(double M, const Flux& flux, int count) {
    SortedSpectrum spec = sorted_spectrum(M, flux, count);
    std::string out = "index,family,k,sigma,sigma_bar,multiplicity\n";
    for (const auto& e : spec.entries) {
        out += std::to_string(e.index);
        out += ',';
        out += family_name(e.branch.family);
        out += ',';
        out += std::to_string(e.branch.k);
        out += ',';
        out += format_double(e.branch.value, 12);
        out += ',';
        out += format_double(e.branch.normalized, 12);
        out += ',';
        out += std::to_string(e.multiplicity);
        out += '\n';
    }
    return out;
}

std::string branch_diagram_csv(const Flux& flux, double M_max, int grid) {
    if (!(M_max > 0.0) || grid < 2) throw DomainError("bad branch diagram parameters");
    std::string out = "M,s10,s20,s11,s21,s1m1,s2m1\n";
    for (int i = 1; i <= grid; ++i) {
        double M = M_max * i / grid;
        out += format_double(M, 12);
        for (int k : {0, 1, -1}) {
            out += ',';
            out += format_double(branch_value(M, flux, k, Family::TanhType).normalized, 12);
            out += ',';
            out += format_double(branch_value(M, flux, k, Family::CothType).normalized, 12);
        }
        out += '\n';
    }
    return out;
}

namespace {

// Height at which a shrinking (alpha < 0) profile reaches rho = 0:
// integral of 1/sqrt(x^(2 alpha) - 1) from 0 to 1, regularized at x = 1
// by x = 1 - s^2.
double cap_height(double alpha) {
    auto integrand = [alpha](double s) {
        double x = 1.0 - s * s;
        if (x <= 0.0) return 0.0;
        double u = std::expm1(2.0 * alpha * std::log(x));
        if (u <= 0.0) return 2.0 / std::sqrt(-2.0 * alpha);
        return 2.0 * s / std::sqrt(u);
    };
    return integrate(integrand, 0.0, 1.0).value;
}

} // namespace

std::string profiles_csv(const std::vector<double>& alphas, int grid) {
    if (grid < 2) throw DomainError("grid too small");
    std::string out = "alpha,t,rho\n";
    for (double alpha : alphas) {
        double t_end;
        if (alpha > 0.0) {
            t_end = std::min(3.0, 1.05 * phi(alpha, 8.0));
        } else if (alpha < 0.0) {
            t_end = 0.9 * cap_height(alpha);
        } else {
            throw DomainError("alpha must be nonzero");
        }
        AlphaProfile p = profile(alpha, t_end);
        for (int i = 0; i <= grid; ++i) {
            double t = t_end * i / grid;
            out += format_double(alpha, 12);
            out += ',';
            out += format_double(t, 12);
            out += ',';
            out += format_double(p.rho(t), 12);
            out += '\n';
        }
    }
    return out;
}

std::string sections_csv(const std::vector<double>& alphas, int grid) {
    if (grid < 2) throw DomainError("grid too small");
    std::string out = "alpha,x,z\n";
    for (double alpha : alphas) {
        AlphaSurfaceData data = free_boundary_radius(alpha);
        AlphaProfile p = profile(alpha, data.T * 1.0000001);
        for (int i = -grid; i <= grid; ++i) {
            double t = data.T * i / grid;
            double rho = p.rho(std::fabs(t));  // even profile
            out += format_double(alpha, 12);
            out += ',';
            out += format_double(data.ball_scale * rho, 12);
            out += ',';
            out += format_double(data.ball_scale * t, 12);
            out += '\n';
        }
    }
    return out;
}

std::string csv_to_svg(const std::string& csv, int x_col, int y_col, int group_col) {
    auto rows = parse_csv(csv);
    if (rows.size() < 2) throw DomainError("empty CSV");
    const double width = 640, height = 480, margin = 40;

    struct Pt { std::string group; double x, y; };
    std::vector<Pt> pts;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        double x = std::stod(r.at(x_col));
        double y = std::stod(r.at(y_col));
        std::string g = group_col >= 0 ? r.at(group_col) : "";
        pts.push_back({g, x, y});
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    auto sx = [&](double x) {
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    };
    auto sy = [&](double y) {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
                      "height=\"480\" viewBox=\"0 0 640 480\">\n";
    size_t i = 0;
    while (i < pts.size()) {
        size_t j = i;
        while (j < pts.size() && pts[j].group == pts[i].group) ++j;
        out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (size_t m = i; m < j; ++m) {
            out += format_double(sx(pts[m].x), 6);
            out += ',';
            out += format_double(sy(pts[m].y), 6);
            if (m + 1 < j) out += ' ';
        }
        out += "\"/>\n";
        i = j;
    }
    out += "</svg>\n";
    return out;
}

} // namespace steklov
