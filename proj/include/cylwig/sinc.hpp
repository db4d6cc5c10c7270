#pragma once

#include <cstddef>

namespace cylwig {

/// sin(x)/x with the removable singularity filled in: sinc(0) = 1.
double sinc_eval(double x);

/// d^order/dx^order of sinc(x), order in [0, 3].
double sinc_deriv(double x, int order);

/// sin(pi*u) and cos(pi*u) with exact argument reduction modulo 2
/// (exact zeros on the integer / half-odd-integer lattices).
double sinpi(double u);
double cospi(double u);

/// sinc(pi*u) = sin(pi*u)/(pi*u).
double sincpi(double u);

namespace detail {

// Arbitrary-order sinc derivative. Series/closed-form switch radius grows
// with the order; closed form near zero cancels catastrophically.
double sinc_deriv_any(double x, int order);

}  // namespace detail

}  // namespace cylwig
