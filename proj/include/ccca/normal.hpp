#pragma once

namespace ccca {

// Standard normal density.
double norm_pdf(double x);

// Standard normal CDF, computed from erfc.
double norm_cdf(double x);

// Inverse standard normal CDF. Acklam's rational approximation refined with
// one Halley step, accurate to ~1e-15 over (0, 1).
double norm_quantile(double p);

// P(X <= x, Y <= y) for a standard bivariate normal with correlation rho.
// Drezner-Wesolowsky / Genz algorithm, absolute error below 5e-16.
double bivariate_norm_cdf(double x, double y, double rho);

}  // namespace ccca
