#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "steklov/alpha_surface.hpp"
#include "steklov/catenoid_slab.hpp"
#include "steklov/cylinder.hpp"
#include "steklov/embedding.hpp"
#include "steklov/errors.hpp"
#include "steklov/flux.hpp"
#include "steklov/maximizer.hpp"
#include "steklov/numerics.hpp"
#include "steklov/report.hpp"
#include "steklov/rotinv.hpp"
#include "steklov/weighted_planar.hpp"

using nlohmann::json;
namespace sk = steklov;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw sk::Error("cannot open output file: " + out_path);
    f << text;
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

json flux_params(const sk::Flux& flux) {
    return {{"flux_raw", flux.raw}, {"flux_reduced", flux.reduced}};
}

// Sorted listing of the general-annulus mode pairs, mirroring the cylinder
// spectrum CSV schema with branch families "lower"/"upper".
std::string rotinv_spectrum_csv(const sk::RotInvAnnulus& annulus, int count) {
    struct Row { int k; bool upper; double sigma, normalized; };
    std::vector<Row> rows;
    int K = count + 2;
    double len = 2.0 * std::numbers::pi * (annulus.ratio + 1.0);
    for (int k = -K; k <= K; ++k) {
        sk::ModePair p = sk::branch_pair(annulus, k);
        rows.push_back({k, false, p.sigma1, len * p.sigma1});
        rows.push_back({k, true, p.sigma2, len * p.sigma2});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.upper != b.upper) return !a.upper;
        return a.k < b.k;
    });
    std::string out = "index,family,k,sigma,sigma_bar,multiplicity\n";
    for (int i = 0; i < count && i < (int)rows.size(); ++i) {
        int mult = 0;
        for (const auto& r : rows)
            if (std::fabs(r.sigma - rows[i].sigma) <=
                1e-12 * std::max(1.0, std::fabs(rows[i].sigma)))
                ++mult;
        out += std::to_string(i + 1);
        out += rows[i].upper ? ",upper," : ",lower,";
        out += std::to_string(rows[i].k);
        out += ',' + sk::format_double(rows[i].sigma, 12);
        out += ',' + sk::format_double(rows[i].normalized, 12);
        out += ',' + std::to_string(mult) + '\n';
    }
    return out;
}

struct Check {
    std::string name;
    bool passed;
    double worst;
};

void run_oracle_suite(std::vector<Check>& checks) {
    double worst_dtn = 0.0, worst_fd = 0.0, worst_red = 0.0;
    for (double A : {1.0, 2.0, 4.0}) {
        for (double Z : {0.5, 1.0, 2.0}) {
            for (double nu : {0.0, 0.25, 0.5}) {
                sk::RotInvAnnulus ann{A, Z, sk::reduce_flux(nu)};
                for (int k = -2; k <= 2; ++k) {
                    if (std::fabs(k - nu) == 0.0) continue;
                    sk::ModePair cf = sk::branch_pair(ann, k);
                    sk::ModePair dtn = sk::dtn_mode_eigenvalues(ann, k);
                    worst_dtn = std::max(worst_dtn,
                                         std::fabs(cf.sigma1 - dtn.sigma1) /
                                             std::max(1.0, std::fabs(cf.sigma1)));
                    worst_dtn = std::max(worst_dtn,
                                         std::fabs(cf.sigma2 - dtn.sigma2) /
                                             std::max(1.0, std::fabs(cf.sigma2)));
                    if (k == 0 || k == 1) {
                        sk::ModePair fd = sk::fd_mode_eigenvalues_richardson(ann, k, 800);
                        worst_fd = std::max(worst_fd,
                                            std::fabs(cf.sigma1 - fd.sigma1) /
                                                std::max(1.0, std::fabs(cf.sigma1)));
                        worst_fd = std::max(worst_fd,
                                            std::fabs(cf.sigma2 - fd.sigma2) /
                                                std::max(1.0, std::fabs(cf.sigma2)));
                    }
                }
            }
        }
    }
    for (double M : {0.5, 1.0, 2.0}) {
        for (double nu : {0.0, 0.25, 0.5}) {
            sk::Flux flux = sk::reduce_flux(nu);
            sk::RotInvAnnulus ann{1.0, 2.0 * M, flux};
            for (int k = -2; k <= 2; ++k) {
                sk::ModePair p = sk::branch_pair(ann, k);
                double t = sk::branch_value(M, flux, k, sk::Family::TanhType).value;
                double c = sk::branch_value(M, flux, k, sk::Family::CothType).value;
                worst_red = std::max(worst_red,
                                     std::fabs(p.sigma1 - t) / std::max(1.0, std::fabs(t)));
                worst_red = std::max(worst_red,
                                     std::fabs(p.sigma2 - c) / std::max(1.0, std::fabs(c)));
            }
        }
    }
    checks.push_back({"closed_form_vs_dtn", worst_dtn <= 1e-10, worst_dtn});
    checks.push_back({"closed_form_vs_fd", worst_fd <= 1e-4, worst_fd});
    checks.push_back({"cylinder_reduction", worst_red <= 1e-12, worst_red});
}

void run_monotonicity_suite(std::vector<Check>& checks) {
    bool m_incr = true, s_decr = true;
    double worst_res = 0.0, prev_m = 0.0, prev_s = 0.0;
    for (int i = 0; i < 97; ++i) {
        double nu = 0.005 + i * (0.49 / 96.0);
        sk::MaximizerResult r = sk::sigma2_star(sk::reduce_flux(nu));
        worst_res = std::max(worst_res, r.residual);
        if (i > 0) {
            if (r.M_star <= prev_m) m_incr = false;
            if (r.sigma2_star_normalized >= prev_s) s_decr = false;
        }
        prev_m = r.M_star;
        prev_s = r.sigma2_star_normalized;
    }
    double worst_d = 0.0;
    for (double nu : {0.1, 0.25, 0.4}) {
        double h = 1e-6;
        double fd_m = (sk::m_star(sk::reduce_flux(nu + h)) -
                       sk::m_star(sk::reduce_flux(nu - h))) / (2 * h);
        double fd_s = (sk::sigma2_star(sk::reduce_flux(nu + h)).sigma2_star_normalized -
                       sk::sigma2_star(sk::reduce_flux(nu - h)).sigma2_star_normalized) /
                      (2 * h);
        double cm = sk::m_star_derivative(sk::reduce_flux(nu));
        double cs = sk::sigma2_star_derivative(sk::reduce_flux(nu));
        worst_d = std::max(worst_d, std::fabs(fd_m - cm) / std::fabs(cm));
        worst_d = std::max(worst_d, std::fabs(fd_s - cs) / std::fabs(cs));
    }
    checks.push_back({"m_star_increasing", m_incr, 0.0});
    checks.push_back({"sigma2_star_decreasing", s_decr, 0.0});
    checks.push_back({"m_star_residual", worst_res <= 1e-10, worst_res});
    checks.push_back({"derivatives_vs_fd", worst_d <= 1e-5, worst_d});
}

void run_geometry_suite(std::vector<Check>& checks) {
    double m0 = sk::m0();
    sk::AlphaSurfaceData cat = sk::free_boundary_radius(1.0);
    double worst_cat = std::max({std::fabs(cat.T - m0), std::fabs(cat.R - std::cosh(m0)),
                                 std::fabs(cat.R_c - std::tanh(m0)),
                                 std::fabs(cat.modulus - m0)});
    checks.push_back({"catenoid_identities", worst_cat <= 1e-8, worst_cat});

    double worst_bd = 0.0, worst_fi = 0.0, worst_curv = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
        sk::AlphaSurfaceData data = sk::free_boundary_radius(alpha);
        worst_bd = std::max(worst_bd, sk::steklov_boundary_identity(data).residual);
        sk::AlphaProfile p = sk::profile(alpha, data.T * 1.0000001);
        worst_fi = std::max(worst_fi, sk::first_integral_residual(p));
        for (int i = 0; i <= 20; ++i) {
            double t = data.T * i / 20;
            sk::Curvatures c = sk::curvatures(p, t);
            worst_curv = std::max(worst_curv, std::fabs(c.kappa1 + alpha * c.kappa2));
            worst_curv = std::max(worst_curv,
                                  std::fabs(sk::weighted_mean_curvature_residual(p, t)));
            worst_curv = std::max(worst_curv,
                                  std::fabs(sk::magnetic_harmonicity_residual(p, t)));
        }
    }
    checks.push_back({"steklov_boundary_identity", worst_bd <= 1e-8, worst_bd});
    checks.push_back({"first_integral", worst_fi <= 1e-8, worst_fi});
    checks.push_back({"curvature_residuals", worst_curv <= 1e-7, worst_curv});
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("STEKLOV_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) {
            sk::tol::root = v;
            sk::tol::quad = v;
        }
    }

    CLI::App app{"Magnetic Steklov spectra of annuli: closed forms, "
                 "maximizers, alpha-surfaces, and verification suites"};
    app.require_subcommand(1);

    double modulus = 1.0, flux_raw = 0.0, alpha = 1.0, ratio = 1.0, length = 1.0;
    double r0 = 0.5, offset = 0.0, scan_max = 0.0;
    int count = 8, grid = 64;
    std::string out_path, format = "csv", which, suite = "all";

    auto* c_spectrum = app.add_subcommand("spectrum", "sorted spectrum listing");
    c_spectrum->add_option("--modulus", modulus)->required();
    c_spectrum->add_option("--flux", flux_raw)->required();
    c_spectrum->add_option("--count", count);
    auto* opt_ratio = c_spectrum->add_option("--ratio", ratio);
    c_spectrum->add_option("--length", length)->needs(opt_ratio);
    c_spectrum->add_option("--out", out_path);
    c_spectrum->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* c_maximize = app.add_subcommand("maximize", "optimal modulus and eigenvalue");
    c_maximize->add_option("--flux", flux_raw)->required();
    c_maximize->add_option("--out", out_path);

    auto* c_alpha = app.add_subcommand("alpha", "free-boundary alpha-surface data");
    auto* opt_alpha = c_alpha->add_option("--alpha", alpha);
    auto* opt_mod = c_alpha->add_option("--modulus", modulus);
    opt_alpha->excludes(opt_mod);
    c_alpha->add_option("--out", out_path);

    auto* c_slab = app.add_subcommand("slab", "off-center catenoid slab data");
    c_slab->add_option("--flux", flux_raw)->required();
    c_slab->add_option("--offset", offset);
    c_slab->add_option("--scan", scan_max);
    c_slab->add_option("--grid", grid);
    c_slab->add_option("--out", out_path);

    auto* c_planar = app.add_subcommand("planar", "weighted planar annulus eigenvalues");
    c_planar->add_option("--r0", r0)->required();
    c_planar->add_option("--flux", flux_raw)->required();
    c_planar->add_option("--out", out_path);

    auto* c_embedding = app.add_subcommand("embedding", "maximizing pair samples");
    c_embedding->add_option("--flux", flux_raw)->required();
    c_embedding->add_option("--grid", grid);
    c_embedding->add_option("--out", out_path);
    c_embedding->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* c_figure = app.add_subcommand("figure", "figure data emission");
    c_figure->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    c_figure->add_option("--flux", flux_raw);
    c_figure->add_option("--grid", grid);
    c_figure->add_option("--out", out_path);
    c_figure->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));

    auto* c_verify = app.add_subcommand("verify", "cross-module verification suites");
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"oracles", "monotonicity", "geometry", "all"}));
    c_verify->add_option("--out", out_path);

    try {
        app.parse(argc, argv);

        if (c_spectrum->parsed()) {
            sk::Flux flux = sk::reduce_flux(flux_raw);
            std::string csv;
            if (*opt_ratio) {
                csv = rotinv_spectrum_csv(sk::RotInvAnnulus{ratio, length, flux}, count);
            } else {
                csv = sk::spectrum_csv(modulus, flux, count);
            }
            if (format == "json") {
                json rows = json::array();
                // reuse the CSV rows for a structured echo
                std::istringstream in(csv);
                std::string line;
                std::getline(in, line);
                while (std::getline(in, line)) rows.push_back(line);
                json j = {{"command", "spectrum"},
                          {"params", flux_params(flux)},
                          {"results", {{"rows", rows}}},
                          {"residuals", json::object()}};
                j["params"]["modulus"] = modulus;
                emit(dump_json(j), out_path);
            } else {
                emit(csv, out_path);
            }
        } else if (c_maximize->parsed()) {
            sk::Flux flux = sk::reduce_flux(flux_raw);
            if (flux.reduced == 0.5) {
                std::cerr << "no maximiser at half flux; sup of the second "
                             "normalized eigenvalue is 2*pi, approached as the "
                             "modulus grows\n";
                return 2;
            }
            if (flux.reduced == 0.0) {
                std::cerr << "flux reduces to 0 (classical case); the maximal "
                             "second normalized eigenvalue is 4*pi/M0 at M0\n";
                return 2;
            }
            sk::MaximizerResult r = sk::sigma2_star(flux);
            double tanh_form = 4.0 * std::numbers::pi * (1.0 - flux.reduced) *
                               std::tanh((1.0 - flux.reduced) * r.M_star);
            json j = {{"command", "maximize"},
                      {"params", flux_params(flux)},
                      {"results",
                       {{"M_star", r.M_star},
                        {"sigma2_star", r.sigma2_star_normalized},
                        {"sigma2_star_tanh_form", tanh_form},
                        {"m_star_derivative", sk::m_star_derivative(flux)},
                        {"sigma2_star_derivative", sk::sigma2_star_derivative(flux)}}},
                      {"residuals",
                       {{"m_star_residual", r.residual},
                        {"dual_form_gap",
                         std::fabs(tanh_form - r.sigma2_star_normalized)}}}};
            emit(dump_json(j), out_path);
        } else if (c_alpha->parsed()) {
            if (!*opt_alpha && !*opt_mod)
                throw CLI::ValidationError("alpha", "need --alpha or --modulus");
            double a = *opt_mod ? sk::alpha_of_modulus(modulus) : alpha;
            sk::AlphaSurfaceData data = sk::free_boundary_radius(a);
            sk::BoundaryIdentity bi = sk::steklov_boundary_identity(data);
            double rc_spectral = std::sqrt(-std::expm1(-2.0 * a * std::log(data.R)));
            json j = {{"command", "alpha"},
                      {"params", {{"alpha", a}}},
                      {"results",
                       {{"R", data.R},
                        {"T", data.T},
                        {"ball_scale", data.ball_scale},
                        {"R_c", data.R_c},
                        {"T_c", data.T_c},
                        {"modulus", data.modulus},
                        {"eigenvalue_critical", bi.eigenvalue_critical},
                        {"normalized", bi.normalized}}},
                      {"residuals",
                       {{"steklov_identity", bi.residual},
                        {"rc_dual_route", std::fabs(data.R_c - rc_spectral)},
                        {"cosh_identity",
                         std::fabs(std::pow(data.R, a) -
                                   std::cosh(a * data.modulus))}}}};
            if (*opt_mod) j["params"]["modulus_requested"] = modulus;
            emit(dump_json(j), out_path);
        } else if (c_slab->parsed()) {
            sk::Flux flux = sk::reduce_flux(flux_raw);
            json j = {{"command", "slab"}, {"params", flux_params(flux)}};
            j["params"]["offset"] = offset;
            sk::SlabData d = sk::slab_data(offset, flux);
            j["results"] = {{"z1", d.z1},     {"z2", d.z2}, {"T", d.T},
                            {"ratio", d.ratio}, {"g", d.g}};
            double nu = flux.reduced;
            double res1 = std::fabs((1.0 - nu) * std::tanh((1.0 - nu) * (d.z1 - offset)) -
                                    nu * sk::coth(nu * d.z1));
            double res2 = std::fabs((1.0 - nu) * std::tanh((1.0 - nu) * (d.z2 - offset)) -
                                    nu * sk::coth(nu * d.z2));
            j["residuals"] = {{"root_defect_z1", res1}, {"root_defect_z2", res2}};
            if (scan_max > 0.0) {
                sk::ScanVerdict v = sk::g_monotonicity_scan(flux, scan_max, grid);
                j["results"]["scan"] = {{"strictly_decreasing", v.strictly_decreasing},
                                        {"max_at_zero", v.max_at_zero}};
            }
            emit(dump_json(j), out_path);
        } else if (c_planar->parsed()) {
            sk::Flux flux = sk::reduce_flux(flux_raw);
            sk::WeightedAnnulus ann{r0, flux};
            auto [s_minus, s_plus] = sk::radial_eigenvalues(ann);
            json j = {{"command", "planar"},
                      {"params", flux_params(flux)},
                      {"results",
                       {{"sigma_minus", s_minus},
                        {"sigma_plus", s_plus},
                        {"normalized_first", sk::normalized_first(ann)}}},
                      {"residuals",
                       {{"product_identity",
                         std::fabs(s_minus * s_plus -
                                   flux.reduced * flux.reduced)},
                        {"det_at_sigma_minus", sk::matching_determinant(ann, s_minus)},
                        {"det_at_sigma_plus", sk::matching_determinant(ann, s_plus)}}}};
            j["params"]["r0"] = r0;
            emit(dump_json(j), out_path);
        } else if (c_embedding->parsed()) {
            sk::Flux flux = sk::reduce_flux(flux_raw);
            sk::EmbeddingData data = sk::make_embedding(flux, std::max(grid, 2));
            if (format == "json") {
                json j = {{"command", "embedding"},
                          {"params", flux_params(flux)},
                          {"results",
                           {{"M_star", data.M_star},
                            {"a_norm", data.a_norm},
                            {"sigma_crossing", data.sigma_crossing}}},
                          {"residuals",
                           {{"boundary_norm",
                             std::fabs(sk::boundary_norm_squared(flux, data.M_star) -
                                       1.0)},
                            {"inner_product_at_boundary",
                             std::fabs(sk::free_boundary_inner_product(flux,
                                                                       data.M_star))}}}};
                emit(dump_json(j), out_path);
            } else {
                std::string csv = "t,psi,fu\n";
                for (const auto& s : data.samples) {
                    csv += sk::format_double(s.t, 12);
                    csv += ',' + sk::format_double(s.psi, 12);
                    csv += ',' + sk::format_double(s.inner_product, 12);
                    csv += '\n';
                }
                emit(csv, out_path);
            }
        } else if (c_figure->parsed()) {
            std::string csv;
            int x_col, y_col, group_col;
            if (which == "fig1") {
                csv = sk::branch_diagram_csv(sk::reduce_flux(flux_raw), 5.0,
                                             grid > 2 ? grid : 500);
                x_col = 0; y_col = 1; group_col = -1;
            } else if (which == "fig2") {
                csv = sk::profiles_csv({-1.0, -0.5, 0.5, 1.0, 2.0},
                                       grid > 2 ? grid : 200);
                x_col = 1; y_col = 2; group_col = 0;
            } else {
                csv = sk::sections_csv({0.5, 1.0, 2.0, 4.0}, grid > 2 ? grid : 200);
                x_col = 1; y_col = 2; group_col = 0;
            }
            if (format == "svg") {
                emit(sk::csv_to_svg(csv, x_col, y_col, group_col), out_path);
            } else {
                emit(csv, out_path);
            }
        } else if (c_verify->parsed()) {
            std::vector<Check> checks;
            if (suite == "oracles" || suite == "all") run_oracle_suite(checks);
            if (suite == "monotonicity" || suite == "all") run_monotonicity_suite(checks);
            if (suite == "geometry" || suite == "all") run_geometry_suite(checks);
            bool all_pass = true;
            json rows = json::array();
            for (const auto& c : checks) {
                all_pass = all_pass && c.passed;
                rows.push_back({{"name", c.name},
                                {"passed", c.passed},
                                {"worst_residual", c.worst}});
            }
            json j = {{"command", "verify"},
                      {"params", {{"suite", suite}}},
                      {"results", {{"checks", rows}, {"passed", all_pass}}},
                      {"residuals", json::object()}};
            emit(dump_json(j), out_path);
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const sk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
