// AVX2 + FMA variants of the shifted-sinc row kernels. Compiled with
// -mavx2 -mfma for this translation unit only; selection happens at runtime.

#include "cylwig/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace cylwig::simd {

namespace {

constexpr double kNearZero = 1e-2;

inline __m256d sinc_series(__m256d u) {
    const __m256d u2 = _mm256_mul_pd(u, u);
    __m256d p = _mm256_set1_pd(-1.0 / 5040.0);
    p = _mm256_fmadd_pd(p, u2, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, u2, _mm256_set1_pd(-1.0 / 6.0));
    return _mm256_fmadd_pd(p, u2, _mm256_set1_pd(1.0));
}

inline __m256d sinc_deriv_series(__m256d u) {
    const __m256d u2 = _mm256_mul_pd(u, u);
    __m256d p = _mm256_set1_pd(-1.0 / 840.0);
    p = _mm256_fmadd_pd(p, u2, _mm256_set1_pd(1.0 / 30.0));
    p = _mm256_fmadd_pd(p, u2, _mm256_set1_pd(-1.0 / 3.0));
    return _mm256_mul_pd(p, u);
}

void accum_sinc_avx2(int s2, LatticeTrig t, const double* pbar, const double* sinpb, const double* cospb,
                     double h_re, double h_im, double* out_re, double* out_im, std::size_t n) {
    const double s = 0.5 * s2;
    const __m256d vs = _mm256_set1_pd(s);
    const __m256d vpi = _mm256_set1_pd(M_PI);
    const __m256d a_ss = _mm256_set1_pd(t.a_ss);
    const __m256d a_sc = _mm256_set1_pd(t.a_sc);
    const __m256d vhre = _mm256_set1_pd(h_re);
    const __m256d vhim = _mm256_set1_pd(h_im);
    const __m256d eps = _mm256_set1_pd(kNearZero);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d pb = _mm256_loadu_pd(pbar + i);
        const __m256d u = _mm256_mul_pd(vpi, _mm256_sub_pd(pb, vs));
        const __m256d sin_u = _mm256_fmadd_pd(a_ss, _mm256_loadu_pd(sinpb + i), _mm256_mul_pd(a_sc, _mm256_loadu_pd(cospb + i)));
        const __m256d direct = _mm256_div_pd(sin_u, u);
        const __m256d near = _mm256_cmp_pd(_mm256_and_pd(u, absmask), eps, _CMP_LT_OQ);
        const __m256d v = _mm256_blendv_pd(direct, sinc_series(u), near);
        _mm256_storeu_pd(out_re + i, _mm256_fmadd_pd(vhre, v, _mm256_loadu_pd(out_re + i)));
        _mm256_storeu_pd(out_im + i, _mm256_fmadd_pd(vhim, v, _mm256_loadu_pd(out_im + i)));
    }
    for (; i < n; ++i) {
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

void accum_sinc_deriv_avx2(int s2, LatticeTrig t, const double* pbar, const double* sinpb, const double* cospb,
                           double h_re, double h_im, double* out_re, double* out_im, std::size_t n) {
    const double s = 0.5 * s2;
    const __m256d vs = _mm256_set1_pd(s);
    const __m256d vpi = _mm256_set1_pd(M_PI);
    const __m256d a_ss = _mm256_set1_pd(t.a_ss);
    const __m256d a_sc = _mm256_set1_pd(t.a_sc);
    const __m256d a_cs = _mm256_set1_pd(t.a_cs);
    const __m256d a_cc = _mm256_set1_pd(t.a_cc);
    const __m256d vhre = _mm256_set1_pd(h_re);
    const __m256d vhim = _mm256_set1_pd(h_im);
    const __m256d eps = _mm256_set1_pd(kNearZero);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d pb = _mm256_loadu_pd(pbar + i);
        const __m256d u = _mm256_mul_pd(vpi, _mm256_sub_pd(pb, vs));
        const __m256d sp = _mm256_loadu_pd(sinpb + i);
        const __m256d cp = _mm256_loadu_pd(cospb + i);
        const __m256d sin_u = _mm256_fmadd_pd(a_ss, sp, _mm256_mul_pd(a_sc, cp));
        const __m256d cos_u = _mm256_fmadd_pd(a_cs, sp, _mm256_mul_pd(a_cc, cp));
        const __m256d direct = _mm256_div_pd(_mm256_sub_pd(cos_u, _mm256_div_pd(sin_u, u)), u);
        const __m256d near = _mm256_cmp_pd(_mm256_and_pd(u, absmask), eps, _CMP_LT_OQ);
        const __m256d v = _mm256_blendv_pd(direct, sinc_deriv_series(u), near);
        _mm256_storeu_pd(out_re + i, _mm256_fmadd_pd(vhre, v, _mm256_loadu_pd(out_re + i)));
        _mm256_storeu_pd(out_im + i, _mm256_fmadd_pd(vhim, v, _mm256_loadu_pd(out_im + i)));
    }
    for (; i < n; ++i) {
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

const Kernels* avx2_kernels() {
    static const Kernels k{"avx2", accum_sinc_avx2, accum_sinc_deriv_avx2};
    return &k;
}

}  // namespace cylwig::simd

#else

namespace cylwig::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace cylwig::simd

#endif
