#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccca/errors.hpp"

namespace ccca {

enum class CopulaFamily { Gumbel, Clayton, Frank, Gaussian, Independence };

const char* family_name(CopulaFamily family);
CopulaFamily family_from_name(const std::string& name);

// Bivariate copula with a scalar dependence parameter. Construction checks
// the parameter domain: Gumbel alpha >= 1, Clayton alpha > 0, Frank
// alpha != 0, Gaussian |alpha| < 1. Independence ignores alpha.
class CopulaModel {
public:
    CopulaModel(CopulaFamily family, double alpha);

    CopulaFamily family() const { return family_; }
    double alpha() const { return alpha_; }

private:
    CopulaFamily family_;
    double alpha_;
};

// C(u, v) on [0,1]^2.
double copula_cdf(const CopulaModel& model, double u, double v);

// Copula density; (u, v) are clamped to [1e-6, 1-1e-6] first since the
// Clayton/Gumbel densities diverge at the corners.
double copula_density(const CopulaModel& model, double u, double v);

// log of copula_density, evaluated in closed form for stability.
double copula_log_density(const CopulaModel& model, double u, double v);

struct CopulaSample {
    std::vector<double> u;
    std::vector<double> v;
};

// n pairs with uniform margins and the model's dependence, deterministic
// given the seed. Archimedean families sample by conditional inversion,
// the Gaussian family through correlated normals.
CopulaSample sample_copula(const CopulaModel& model, std::size_t n, std::uint64_t seed);

// sum over pairs of copula_log_density
double pseudo_log_likelihood(const CopulaModel& model, const std::vector<double>& u,
                             const std::vector<double>& v);

}  // namespace ccca
