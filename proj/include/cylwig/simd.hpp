#pragma once

#include <cstddef>

namespace cylwig::simd {

// Trig of u = pi*(pbar - s) resolved from precomputed sin(pi*pbar), cos(pi*pbar)
// when 2s is an integer:  sin(u) = a_ss*sp + a_sc*cp,  cos(u) = a_cs*sp + a_cc*cp.
struct LatticeTrig {
    double a_ss, a_sc, a_cs, a_cc;
};

LatticeTrig lattice_trig(int s2);

// Inner accumulation kernels for rows of phase-space grids. For each i:
//   u = pi*(pbar[i] - s2/2)
//   accum_sinc:        v = sinc(u)
//   accum_sinc_deriv:  v = sinc'(u)
//   out_re[i] += h_re*v;  out_im[i] += h_im*v
// sinpb/cospb hold sin(pi*pbar[i]), cos(pi*pbar[i]).
struct Kernels {
    const char* name;
    void (*accum_sinc)(int s2, LatticeTrig t, const double* pbar, const double* sinpb, const double* cospb,
                       double h_re, double h_im, double* out_re, double* out_im, std::size_t n);
    void (*accum_sinc_deriv)(int s2, LatticeTrig t, const double* pbar, const double* sinpb, const double* cospb,
                             double h_re, double h_im, double* out_re, double* out_im, std::size_t n);
};

/// Kernels picked at startup from CPU features; env CYLWIG_SIMD=scalar|avx2
/// forces a lane (unsupported forces fall back to scalar).
const Kernels& active();

const Kernels& scalar_kernels();

/// nullptr when the build or CPU lacks AVX2.
const Kernels* avx2_kernels();

}  // namespace cylwig::simd
