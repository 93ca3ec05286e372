// AVX2+FMA variants of the kernel sums. This translation unit is compiled
// with -mavx2 -mfma; the dispatcher only calls into it after checking CPU
// support at runtime.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "ccca/kernels.hpp"

namespace ccca::kernels::detail {

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#if defined(__AVX2__) && defined(__FMA__)

namespace {

#include "normal_cdf_cheb.inc"

constexpr double kLog2E = 1.4426950408889634073599246810019;
constexpr double kExpC1 = 6.93145751953125e-1;
constexpr double kExpC2 = 1.42860682030941723212e-6;
constexpr double kExpMaxArg = 709.78;
constexpr double kExpMinArg = -708.39;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

// exp for 4 doubles: 2^n * R(r) with the classic Pade approximant of e^r on
// |r| <= 0.5 ln 2. Matches libm to within ~2 ulp.
inline __m256d exp4(__m256d x) {
    const __m256d P0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d P1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d P2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d Q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d Q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d Q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d Q3 = _mm256_set1_pd(2.00000000000000000005e0);

    x = _mm256_min_pd(_mm256_set1_pd(kExpMaxArg), _mm256_max_pd(_mm256_set1_pd(kExpMinArg), x));

    const __m256d n =
        _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)), _MM_FROUND_TO_NEAREST_INT);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kExpC1), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kExpC2), r);

    const __m256d rr = _mm256_mul_pd(r, r);
    __m256d px = _mm256_fmadd_pd(P0, rr, P1);
    px = _mm256_fmadd_pd(px, rr, P2);
    px = _mm256_mul_pd(px, r);
    __m256d qx = _mm256_fmadd_pd(Q0, rr, Q1);
    qx = _mm256_fmadd_pd(qx, rr, Q2);
    qx = _mm256_fmadd_pd(qx, rr, Q3);
    const __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    __m256d res = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // scale by 2^n through the exponent bits
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i pow2 =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    res = _mm256_mul_pd(res, _mm256_castsi256_pd(pow2));
    return res;
}

// standard normal CDF for 4 doubles:
//   Phi(x) = q        for x <= 0,  q = 0.5 exp(-y^2) erfcx(y), y = |x|/sqrt(2)
//   Phi(x) = 1 - q    for x > 0
// erfcx via the Chebyshev table in normal_cdf_cheb.inc (Clenshaw recurrence).
inline __m256d norm_cdf4(__m256d x) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d y = _mm256_mul_pd(
        _mm256_andnot_pd(_mm256_set1_pd(-0.0), x), _mm256_set1_pd(kInvSqrt2));

    const __m256d yc = _mm256_min_pd(y, _mm256_set1_pd(kErfcxYmax));
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(yc, _mm256_set1_pd(kErfcxShift)),
                                    _mm256_add_pd(yc, _mm256_set1_pd(kErfcxShift)));
    const __m256d w = _mm256_fmadd_pd(_mm256_set1_pd(kErfcxWa), s, _mm256_set1_pd(kErfcxWb));
    const __m256d w2 = _mm256_add_pd(w, w);

    __m256d b1 = zero, b2 = zero;
    for (int k = kErfcxDegree; k >= 1; --k) {
        const __m256d t = _mm256_sub_pd(_mm256_fmadd_pd(w2, b1, _mm256_set1_pd(kErfcxCheb[k])), b2);
        b2 = b1;
        b1 = t;
    }
    const __m256d erfcx =
        _mm256_sub_pd(_mm256_fmadd_pd(w, b1, _mm256_set1_pd(kErfcxCheb[0])), b2);

    const __m256d expmy2 = exp4(_mm256_mul_pd(_mm256_sub_pd(zero, y), y));
    const __m256d q = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(0.5), expmy2), erfcx);

    const __m256d mask = _mm256_cmp_pd(x, zero, _CMP_GT_OQ);
    return _mm256_blendv_pd(q, _mm256_sub_pd(_mm256_set1_pd(1.0), q), mask);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double normal_cdf_sum_avx2(const double* x, std::size_t n, double z, double inv_h) {
    const __m256d zv = _mm256_set1_pd(z);
    const __m256d hv = _mm256_set1_pd(inv_h);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, norm_cdf4(_mm256_mul_pd(_mm256_sub_pd(zv, xv), hv)));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        total += 0.5 * std::erfc((x[i] - z) * inv_h * kInvSqrt2);
    }
    return total;
}

double gauss_pair_sum_avx2(const double* a, const double* b, std::size_t n, double u, double v,
                           double inv_ha, double inv_hb) {
    const __m256d uv = _mm256_set1_pd(u);
    const __m256d vv = _mm256_set1_pd(v);
    const __m256d hav = _mm256_set1_pd(inv_ha);
    const __m256d hbv = _mm256_set1_pd(inv_hb);
    const __m256d mhalf = _mm256_set1_pd(-0.5);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d da = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), uv), hav);
        const __m256d db = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(b + i), vv), hbv);
        const __m256d arg =
            _mm256_mul_pd(mhalf, _mm256_fmadd_pd(da, da, _mm256_mul_pd(db, db)));
        acc = _mm256_add_pd(acc, exp4(arg));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        const double da = (a[i] - u) * inv_ha;
        const double db = (b[i] - v) * inv_hb;
        total += std::exp(-0.5 * (da * da + db * db));
    }
    return total;
}

#else

double normal_cdf_sum_avx2(const double* x, std::size_t n, double z, double inv_h) {
    return normal_cdf_sum_scalar(x, n, z, inv_h);
}

double gauss_pair_sum_avx2(const double* a, const double* b, std::size_t n, double u, double v,
                           double inv_ha, double inv_hb) {
    return gauss_pair_sum_scalar(a, b, n, u, v, inv_ha, inv_hb);
}

#endif  // __AVX2__ && __FMA__

}  // namespace ccca::kernels::detail

#endif  // x86_64
