#include <cmath>

#include "cylwig/simd.hpp"

namespace cylwig::simd {

LatticeTrig lattice_trig(int s2) {
    if (s2 % 2 == 0) {
        const int q = s2 / 2;
        const double sigma = (q & 1) ? -1.0 : 1.0;
        return {sigma, 0.0, 0.0, sigma};
    }
    // s = q + 1/2: sin(u) = -(-1)^q cos(pi pbar), cos(u) = (-1)^q sin(pi pbar)
    const int q = (s2 - 1) / 2;
    const double sigma = (q & 1) ? -1.0 : 1.0;
    return {0.0, -sigma, sigma, 0.0};
}

namespace {

constexpr double kNearZero = 1e-2;

void accum_sinc_ref(int s2, LatticeTrig t, const double* pbar, const double* sinpb, const double* cospb,
                    double h_re, double h_im, double* out_re, double* out_im, std::size_t n) {
    const double s = 0.5 * s2;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = M_PI * (pbar[i] - s);
        double v;
        if (std::abs(u) < kNearZero) {
            const double u2 = u * u;
            v = 1.0 + u2 * (-1.0 / 6.0 + u2 * (1.0 / 120.0 - u2 / 5040.0));
        } else {
            v = (t.a_ss * sinpb[i] + t.a_sc * cospb[i]) / u;
        }
        out_re[i] += h_re * v;
        out_im[i] += h_im * v;
    }
}

void accum_sinc_deriv_ref(int s2, LatticeTrig t, const double* pbar, const double* sinpb, const double* cospb,
                          double h_re, double h_im, double* out_re, double* out_im, std::size_t n) {
    const double s = 0.5 * s2;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = M_PI * (pbar[i] - s);
        double v;
        if (std::abs(u) < kNearZero) {
            const double u2 = u * u;
            v = u * (-1.0 / 3.0 + u2 * (1.0 / 30.0 - u2 / 840.0));
        } else {
            const double sin_u = t.a_ss * sinpb[i] + t.a_sc * cospb[i];
            const double cos_u = t.a_cs * sinpb[i] + t.a_cc * cospb[i];
            v = (cos_u - sin_u / u) / u;
        }
        out_re[i] += h_re * v;
        out_im[i] += h_im * v;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", accum_sinc_ref, accum_sinc_deriv_ref};
    return k;
}

}  // namespace cylwig::simd
