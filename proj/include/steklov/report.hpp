#pragma once

#include <string>
#include <vector>

#include "steklov/cylinder.hpp"
#include "steklov/flux.hpp"

namespace steklov {

// Fixed-width significant-digit formatting; output is deterministic.
std::string format_double(double value, int significant_digits);

// CSV of the sorted flat-annulus spectrum. Columns:
// index,family,k,sigma,sigma_bar,multiplicity
std::string spectrum_csv(double M, const Flux& flux, int count);

// Branch diagram data: columns M,s10,s20,s11,s21,s1m1,s2m1 (normalized
// values of modes k = 0, 1, -1, both families) over an M grid on (0, M_max].
std::string branch_diagram_csv(const Flux& flux, double M_max, int grid);

// Profile polylines (alpha,t,rho) for a grid of alpha values including
// negative ones (sphere-like caps).
std::string profiles_csv(const std::vector<double>& alphas, int grid);

// Critical-surface sections in the xz-plane: columns alpha,x,z with the
// slice scaled into the unit ball.
std::string sections_csv(const std::vector<double>& alphas, int grid);

// Thin polyline SVG over grouped CSV data (first column = group key,
// last two columns = x, y).
std::string csv_to_svg(const std::string& csv, int x_col, int y_col, int group_col);

} // namespace steklov
