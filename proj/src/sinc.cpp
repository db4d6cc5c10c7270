#include "cylwig/sinc.hpp"

#include <cmath>
#include <cstdlib>

#include "cylwig/common.hpp"

namespace cylwig {

double sinc_eval(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-3) {
        // 6-term Taylor series; remainder < 1e-45 at the switch radius.
        const double x2 = x * x;
        return 1.0 + x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (-1.0 / 5040.0 + x2 * (1.0 / 362880.0 - x2 / 39916800.0))));
    }
    return std::sin(x) / x;
}

namespace detail {

double sinc_deriv_any(double x, int order) {
    if (order < 0) throw ParameterError("sinc derivative order must be >= 0");
    if (order == 0) return sinc_eval(x);

    const double ax = std::abs(x);
    const double switch_radius = std::max(1.0, 0.75 * order);
    if (ax < switch_radius) {
        // Differentiate the Taylor series of sin(x)/x term by term.
        // sinc(x) = sum_m (-1)^m x^{2m} / (2m+1)!
        double acc = 0.0;
        const int m0 = (order + 1) / 2;
        for (int m = m0; m <= m0 + 40; ++m) {
            double coeff = 1.0;  // (2m)(2m-1)...(2m-order+1) / (2m+1)!
            for (int i = 0; i < order; ++i) coeff *= static_cast<double>(2 * m - i);
            for (int i = 2; i <= 2 * m + 1; ++i) coeff /= static_cast<double>(i);
            const double term = ((m & 1) ? -coeff : coeff) * std::pow(x, 2 * m - order);
            acc += term;
            if (std::abs(term) < 1e-22 * (std::abs(acc) + 1e-30)) break;
        }
        return acc;
    }

    // d^j/dx^j [sin(x) * x^{-1}] via the Leibniz rule;
    // sin^{(l)}(x) = sin(x + l pi/2), d^m/dx^m x^{-1} = (-1)^m m! x^{-m-1}.
    const double s = std::sin(x);
    const double c = std::cos(x);
    double acc = 0.0;
    double binom = 1.0;
    double inv_pow = 1.0 / x;  // |x|^{-(j-l+1)} built below
    // Walk l = order down to 0 so the x power grows one step at a time.
    // term(l) = C(j,l) * sin(x + l pi/2) * (-1)^{j-l} (j-l)! / x^{j-l+1}
    double fact = 1.0;
    for (int l = order; l >= 0; --l) {
        const int r = order - l;  // derivative order applied to 1/x
        double trig;
        switch (l & 3) {
            case 0: trig = s; break;
            case 1: trig = c; break;
            case 2: trig = -s; break;
            default: trig = -c; break;
        }
        const double sign = (r & 1) ? -1.0 : 1.0;
        acc += binom * trig * sign * fact * inv_pow;
        // update C(j,l) -> C(j,l-1), (j-l)! -> (j-l+1)!, x^{-(r+1)} -> x^{-(r+2)}
        binom = binom * l / static_cast<double>(r + 1);
        fact *= static_cast<double>(r + 1);
        inv_pow /= x;
    }
    return acc;
}

}  // namespace detail

double sinc_deriv(double x, int order) {
    if (order < 0 || order > 3) throw ParameterError("sinc_deriv supports orders 0..3");
    return detail::sinc_deriv_any(x, order);
}

namespace {

// Folds u into [-0.5, 0.5] such that sin(pi*u) = sign * sin(pi*fold(u)).
// fmod by 2.0 is exact for doubles, so the lattice zeros stay exact.
double fold_half(double u, double& sign) {
    double r = std::fmod(u, 2.0);
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    sign = 1.0;
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return r;
}

}  // namespace

double sinpi(double u) {
    double sign;
    const double r = fold_half(u, sign);
    return sign * std::sin(kPi * r);
}

double cospi(double u) {
    // cos(pi*u) = sin(pi*(0.5 - u)); 0.5 - u is exact for |u| in a wide range,
    // but build it from the folded value to avoid losing the lattice zeros.
    double r = std::fmod(u, 2.0);
    if (r < 0.0) r += 2.0;  // cos is even and 2-periodic
    // r in [0, 2)
    if (r == 0.5 || r == 1.5) return 0.0;
    if (r <= 0.5) return std::cos(kPi * r);
    if (r <= 1.5) return -std::cos(kPi * (r - 1.0));
    return std::cos(kPi * (r - 2.0));
}

double sincpi(double u) {
    const double d = kPi * u;
    if (std::abs(d) < 1e-3) {
        const double d2 = d * d;
        return 1.0 + d2 * (-1.0 / 6.0 + d2 * (1.0 / 120.0 + d2 * (-1.0 / 5040.0 + d2 * (1.0 / 362880.0 - d2 / 39916800.0))));
    }
    return sinpi(u) / d;
}

}  // namespace cylwig
