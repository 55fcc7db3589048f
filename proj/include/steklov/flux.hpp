#pragma once

#include <cmath>

#include "steklov/errors.hpp"

namespace steklov {

// Flux parameter with its canonical representative in [0, 1/2].
// All spectral formulas consume `reduced` only; `raw` is kept for echo.
struct Flux {
    double raw;
    double reduced;
};

inline Flux reduce_flux(double raw) {
    if (!std::isfinite(raw)) throw NonFinite("flux must be finite");
    double reduced = std::fabs(raw - std::nearbyint(raw));
    if (reduced > 0.5) reduced = 0.5;
    return Flux{raw, reduced};
}

} // namespace steklov
