#include "ccca/regression.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "ccca/empirical.hpp"
#include "ccca/rng.hpp"

namespace ccca {

namespace {

struct FamilyRange {
    double lo, hi;
};

FamilyRange training_range(CopulaFamily family) {
    switch (family) {
        case CopulaFamily::Gumbel: return {1.0, 20.0};
        case CopulaFamily::Clayton: return {0.001, 20.0};
        case CopulaFamily::Frank: return {0.001, 20.0};
        // The dependence index cannot see the sign of the Gaussian
        // correlation, so the trained branch is the nonnegative one.
        case CopulaFamily::Gaussian: return {0.01, 0.99};
        case CopulaFamily::Independence: break;
    }
    throw Error("regression: no training range for independence family");
}

FamilyRange family_domain(CopulaFamily family) {
    switch (family) {
        case CopulaFamily::Gumbel: return {1.0, std::numeric_limits<double>::infinity()};
        case CopulaFamily::Clayton:
            return {std::numeric_limits<double>::min(), std::numeric_limits<double>::infinity()};
        case CopulaFamily::Frank:
            return {-std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()};
        case CopulaFamily::Gaussian: return {-0.999999, 0.999999};
        case CopulaFamily::Independence: break;
    }
    return {0.0, 0.0};
}

// 3x3 linear solve by Gaussian elimination with partial pivoting
std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> m) {
    for (int c = 0; c < 3; ++c) {
        int pivot = c;
        for (int r = c + 1; r < 3; ++r) {
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        }
        if (std::abs(m[pivot][c]) < 1e-12) {
            throw Error("fit_alpha_regression: rank-deficient basis (too few distinct cos values)");
        }
        std::swap(m[c], m[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

TrainingGrid default_training_grid(CopulaFamily family, std::uint64_t seed) {
    const FamilyRange r = training_range(family);
    TrainingGrid grid;
    grid.family = family;
    grid.seed = seed;
    grid.samples_per_point = 5000;
    constexpr std::size_t kPoints = 50;
    grid.alpha_values.resize(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
        grid.alpha_values[i] =
            r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(kPoints - 1);
    }
    return grid;
}

std::vector<TrainingPoint> generate_training_data(const TrainingGrid& grid) {
    if (grid.alpha_values.empty()) throw Error("generate_training_data: empty grid");
    if (grid.samples_per_point < 100) {
        throw Error("generate_training_data: need at least 100 samples per grid point");
    }
    std::vector<TrainingPoint> data;
    data.reserve(grid.alpha_values.size());
    for (std::size_t i = 0; i < grid.alpha_values.size(); ++i) {
        const double alpha = grid.alpha_values[i];
        const CopulaModel model(grid.family, alpha);
        const CopulaSample s =
            sample_copula(model, grid.samples_per_point, Rng::mix(grid.seed, i));
        data.push_back({cos_index(s.u, s.v), alpha});
    }
    return data;
}

RegressionCoefficients fit_alpha_regression(const std::vector<TrainingPoint>& data,
                                            CopulaFamily family, double alpha_min,
                                            double alpha_max, std::uint64_t seed) {
    if (data.size() < 3) throw Error("fit_alpha_regression: need at least 3 points");
    std::set<double> distinct;
    for (const auto& d : data) distinct.insert(d.cos);
    if (distinct.size() < 3) {
        throw Error("fit_alpha_regression: need at least 3 distinct cos values");
    }

    // sort before accumulating so the fit does not depend on data order
    std::vector<TrainingPoint> sorted = data;
    std::sort(sorted.begin(), sorted.end(), [](const TrainingPoint& a, const TrainingPoint& b) {
        if (a.cos != b.cos) return a.cos < b.cos;
        return a.alpha < b.alpha;
    });

    // normal equations for the basis [c^2, c, 1]
    std::array<std::array<double, 4>, 3> m{};
    for (const auto& d : sorted) {
        const std::array<double, 3> basis{d.cos * d.cos, d.cos, 1.0};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] += basis[i] * basis[j];
            m[i][3] += basis[i] * d.alpha;
        }
    }
    const std::array<double, 3> a = solve3(m);

    RegressionCoefficients out;
    out.family = family;
    out.a1 = a[0];
    out.a2 = a[1];
    out.a3 = a[2];
    out.alpha_min = alpha_min;
    out.alpha_max = alpha_max;
    out.seed = seed;
    double rss = 0.0;
    for (const auto& d : sorted) {
        const double r = d.alpha - (a[0] * d.cos * d.cos + a[1] * d.cos + a[2]);
        rss += r * r;
    }
    out.residual_norm = std::sqrt(rss);
    return out;
}

double predict_alpha(const RegressionCoefficients& coeffs, double cos) {
    if (!(cos >= 0.0 && cos <= 1.0)) throw Error("predict_alpha: cos must lie in [0,1]");
    double alpha = coeffs.a1 * cos * cos + coeffs.a2 * cos + coeffs.a3;
    const FamilyRange dom = family_domain(coeffs.family);
    alpha = std::clamp(alpha, dom.lo, dom.hi);
    alpha = std::clamp(alpha, coeffs.alpha_min, coeffs.alpha_max);
    return alpha;
}

std::vector<RegressionCoefficients> train_all_families(std::uint64_t seed) {
    std::vector<RegressionCoefficients> out;
    const std::array<CopulaFamily, 4> families{CopulaFamily::Gumbel, CopulaFamily::Clayton,
                                               CopulaFamily::Frank, CopulaFamily::Gaussian};
    for (std::size_t f = 0; f < families.size(); ++f) {
        TrainingGrid grid = default_training_grid(families[f], Rng::mix(seed, 1000 + f));
        const auto data = generate_training_data(grid);
        const FamilyRange r = training_range(families[f]);
        out.push_back(fit_alpha_regression(data, families[f], r.lo, r.hi, grid.seed));
    }
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_coefficients(std::ostream& out, const std::vector<RegressionCoefficients>& coeffs) {
    out << "format ccca-coefficients-v1\n";
    for (const auto& c : coeffs) {
        out << "\n";
        out << "family " << family_name(c.family) << "\n";
        out << "a1 " << fmt(c.a1) << "\n";
        out << "a2 " << fmt(c.a2) << "\n";
        out << "a3 " << fmt(c.a3) << "\n";
        out << "alpha_min " << fmt(c.alpha_min) << "\n";
        out << "alpha_max " << fmt(c.alpha_max) << "\n";
        out << "seed " << c.seed << "\n";
        out << "residual_norm " << fmt(c.residual_norm) << "\n";
    }
}

void write_coefficients_file(const std::string& path,
                             const std::vector<RegressionCoefficients>& coeffs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open coefficients file for writing: " + path);
    write_coefficients(out, coeffs);
    if (!out.flush()) throw Error("failed writing coefficients file: " + path);
}

std::vector<RegressionCoefficients> read_coefficients_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open coefficients file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "format ccca-coefficients-v1") {
        throw Error("coefficients file " + path + ": unrecognized header");
    }
    std::vector<RegressionCoefficients> out;
    RegressionCoefficients cur;
    bool open = false;
    auto flush_record = [&]() {
        if (open) out.push_back(cur);
        cur = RegressionCoefficients{};
        open = false;
    };
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "family") {
            flush_record();
            std::string name;
            ss >> name;
            cur.family = family_from_name(name);
            open = true;
            continue;
        }
        if (key == "seed") {
            std::uint64_t sv = 0;
            if (!(ss >> sv) || !open) {
                throw Error("coefficients file " + path + ": bad line " + std::to_string(lineno));
            }
            cur.seed = sv;
            continue;
        }
        double val = 0.0;
        if (!(ss >> val) || !open) {
            throw Error("coefficients file " + path + ": bad line " + std::to_string(lineno));
        }
        if (key == "a1") cur.a1 = val;
        else if (key == "a2") cur.a2 = val;
        else if (key == "a3") cur.a3 = val;
        else if (key == "alpha_min") cur.alpha_min = val;
        else if (key == "alpha_max") cur.alpha_max = val;
        else if (key == "residual_norm") cur.residual_norm = val;
        else throw Error("coefficients file " + path + ": unknown key '" + key + "'");
    }
    flush_record();
    if (out.empty()) throw Error("coefficients file " + path + ": no records");
    return out;
}

const RegressionCoefficients& coefficients_for(const std::vector<RegressionCoefficients>& coeffs,
                                               CopulaFamily family) {
    for (const auto& c : coeffs) {
        if (c.family == family) return c;
    }
    throw Error(std::string("no coefficients for family '") + family_name(family) + "'");
}

}  // namespace ccca
