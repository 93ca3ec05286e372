#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ccca/signal.hpp"

namespace ccca {

// Rank-transformed samples on (0, 1]: u_j = rank(x_j)/n with average ranks
// for ties.
struct PseudoObservations {
    std::vector<double> u;
    std::vector<double> v;
};

// rank(x_j)/n with average ranks for ties
std::vector<double> average_ranks(std::span<const double> x);

// requires equal lengths, n >= 2
PseudoObservations pseudo_observations(std::span<const double> x, std::span<const double> y);

// C_n(u, v) = (1/n) sum 1(u_j <= u, v_j <= v)
double empirical_copula(const PseudoObservations& pobs, double u, double v);

// Relative distance of c from the independence value uv, normalized by the
// distance to the upper (c >= uv) or lower Frechet bound. Zero numerator or
// a degenerate denominator (u or v in {0,1}) returns 0.
double frechet_lambda(double c, double u, double v);

// Dependence index in [0, 1]: 0 at independence, 1 at (piecewise monotone)
// functional dependence. Requires equal lengths, n >= 10.
double cos_index(std::span<const double> x, std::span<const double> y);

// kernel-smoothed marginal CDF estimate: (1/T) sum K((z - sample_i)/h),
// K the standard normal CDF
double kernel_marginal_cdf(std::span<const double> sample, double z, double h);

struct Bandwidths {
    std::vector<double> h;  // marginal CDF smoothing
    std::vector<double> H;  // copula density smoothing
};

// smoothing-window formulas; sigma is the channel standard deviation,
// cap_sigma the standard deviation of the transformed (pseudo-observation)
// channel
double bandwidth_h(std::size_t samples, double sigma);
double bandwidth_H(std::size_t channels, std::size_t samples, double cap_sigma);

// both windows for every channel of Y; rejects zero-variance channels
Bandwidths bandwidths(const SignalMatrix& y);

// Everything the KL estimate needs from Y: per-channel kernel-CDF
// transforms of the samples plus both bandwidth vectors.
struct KernelTransform {
    SignalMatrix pobs;  // p x T matrix of F^(Y_i(t)) values
    std::vector<double> h;
    std::vector<double> H;
};

KernelTransform kernel_transform(const SignalMatrix& y);

// product-kernel copula density estimate at an interior point; the core
// supports p = 2
double kernel_copula_density(const SignalMatrix& pobs, double u1, double u2,
                             const std::vector<double>& H);

// sample standard deviation (n-1 denominator)
double sample_std(std::span<const double> x);

}  // namespace ccca
