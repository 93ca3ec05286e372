#include "ccca/kernels.hpp"

#include <atomic>
#include <cmath>

#include "ccca/errors.hpp"

namespace ccca::kernels {

namespace detail {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

double normal_cdf_sum_scalar(const double* x, std::size_t n, double z, double inv_h) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += 0.5 * std::erfc((x[i] - z) * inv_h * kInvSqrt2);
    }
    return acc;
}

double gauss_pair_sum_scalar(const double* a, const double* b, std::size_t n, double u, double v,
                             double inv_ha, double inv_hb) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = (a[i] - u) * inv_ha;
        const double db = (b[i] - v) * inv_hb;
        acc += std::exp(-0.5 * (da * da + db * db));
    }
    return acc;
}

}  // namespace detail

namespace {

Backend resolve(Backend requested) {
#if defined(__x86_64__) || defined(_M_X64)
    if (requested == Backend::Auto) {
        return detail::avx2_available() ? Backend::Avx2 : Backend::Scalar;
    }
    if (requested == Backend::Avx2 && !detail::avx2_available()) {
        throw Error("kernels: AVX2 backend requested but CPU lacks AVX2/FMA");
    }
    return requested;
#else
    if (requested == Backend::Avx2) {
        throw Error("kernels: AVX2 backend unavailable on this architecture");
    }
    return Backend::Scalar;
#endif
}

std::atomic<Backend> g_active{resolve(Backend::Auto)};

}  // namespace

void select(Backend backend) { g_active.store(resolve(backend)); }

Backend active() { return g_active.load(); }

const char* backend_name() { return active() == Backend::Avx2 ? "avx2" : "scalar"; }

double normal_cdf_sum(const double* x, std::size_t n, double z, double inv_h) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Backend::Avx2) return detail::normal_cdf_sum_avx2(x, n, z, inv_h);
#endif
    return detail::normal_cdf_sum_scalar(x, n, z, inv_h);
}

double gauss_pair_sum(const double* a, const double* b, std::size_t n, double u, double v,
                      double inv_ha, double inv_hb) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Backend::Avx2)
        return detail::gauss_pair_sum_avx2(a, b, n, u, v, inv_ha, inv_hb);
#endif
    return detail::gauss_pair_sum_scalar(a, b, n, u, v, inv_ha, inv_hb);
}

}  // namespace ccca::kernels
