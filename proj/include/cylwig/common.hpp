#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cylwig {

using cd = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cd kImag{0.0, 1.0};

/// Invalid argument values (bad mode index, negative order, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input data fails a declared contract (trace != 1, non-hermitian, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wave-function recovery cannot anchor the phase because |psi(0)| is too small.
struct DegenerateAnchorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cylwig
