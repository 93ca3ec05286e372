#pragma once

#include <cstddef>

// Hot inner loops of the kernel estimators. Each sum has a scalar reference
// implementation and an AVX2 variant selected at runtime; the two are
// equivalence-tested against each other.
namespace ccca::kernels {

enum class Backend { Auto, Scalar, Avx2 };

// Forces a backend (tests use this to exercise both paths). Auto re-probes
// the CPU. Selecting Avx2 on a CPU without AVX2+FMA support throws.
void select(Backend backend);

// Backend that will actually execute.
Backend active();
const char* backend_name();

// sum_i Phi((z - x[i]) * inv_h)  with Phi the standard normal CDF
double normal_cdf_sum(const double* x, std::size_t n, double z, double inv_h);

// sum_i exp(-0.5 * [((a[i]-u)*inv_ha)^2 + ((b[i]-v)*inv_hb)^2])
double gauss_pair_sum(const double* a, const double* b, std::size_t n, double u, double v,
                      double inv_ha, double inv_hb);

namespace detail {
double normal_cdf_sum_scalar(const double* x, std::size_t n, double z, double inv_h);
double gauss_pair_sum_scalar(const double* a, const double* b, std::size_t n, double u, double v,
                             double inv_ha, double inv_hb);
#if defined(__x86_64__) || defined(_M_X64)
double normal_cdf_sum_avx2(const double* x, std::size_t n, double z, double inv_h);
double gauss_pair_sum_avx2(const double* a, const double* b, std::size_t n, double u, double v,
                           double inv_ha, double inv_hb);
bool avx2_available();
#endif
}  // namespace detail

}  // namespace ccca::kernels
