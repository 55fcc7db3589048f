#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numerics
struct NoSignChange : Error { using Error::Error; };
struct MaxIterations : Error { using Error::Error; };
struct MaxSubdivisions : Error { using Error::Error; };
struct Blowup : Error { using Error::Error; };
struct BracketExhausted : Error { using Error::Error; };

// domain validation
struct NonFinite : Error { using Error::Error; };
struct InvalidModulus : Error { using Error::Error; };
struct InvalidAnnulus : Error { using Error::Error; };
struct InvalidRadius : Error { using Error::Error; };
struct FluxOutOfRange : Error { using Error::Error; };
struct DegenerateMode : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NoCrossing : Error { using Error::Error; };

} // namespace steklov
