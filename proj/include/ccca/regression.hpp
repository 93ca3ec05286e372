#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccca/copula.hpp"

namespace ccca {

// Quadratic map from the dependence index to the copula parameter:
// alpha = a1*cos^2 + a2*cos + a3, valid over the alpha range it was
// trained on.
struct RegressionCoefficients {
    CopulaFamily family = CopulaFamily::Independence;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    std::uint64_t seed = 0;
    double residual_norm = 0.0;
};

struct TrainingGrid {
    CopulaFamily family;
    std::vector<double> alpha_values;
    std::size_t samples_per_point = 5000;
    std::uint64_t seed = 0;
};

// 50 evenly spaced parameter values over the family's training range
// (gumbel [1,20], clayton/frank [0.001,20], gaussian [0.01,0.99]),
// 5000 samples per point.
TrainingGrid default_training_grid(CopulaFamily family, std::uint64_t seed);

struct TrainingPoint {
    double cos;
    double alpha;
};

// one (CoS, alpha) pair per grid value; deterministic given the grid seed
std::vector<TrainingPoint> generate_training_data(const TrainingGrid& grid);

// least-squares fit of the quadratic basis [cos^2, cos, 1]; requires at
// least 3 points with 3 distinct cos values
RegressionCoefficients fit_alpha_regression(const std::vector<TrainingPoint>& data,
                                            CopulaFamily family, double alpha_min,
                                            double alpha_max, std::uint64_t seed);

// quadratic evaluation clamped into the intersection of the family domain
// and the trained range
double predict_alpha(const RegressionCoefficients& coeffs, double cos);

// trains all four parametric families with default grids
std::vector<RegressionCoefficients> train_all_families(std::uint64_t seed);

// line-oriented key-value coefficients file
void write_coefficients(std::ostream& out, const std::vector<RegressionCoefficients>& coeffs);
void write_coefficients_file(const std::string& path,
                             const std::vector<RegressionCoefficients>& coeffs);
std::vector<RegressionCoefficients> read_coefficients_file(const std::string& path);

const RegressionCoefficients& coefficients_for(const std::vector<RegressionCoefficients>& coeffs,
                                               CopulaFamily family);

}  // namespace ccca
