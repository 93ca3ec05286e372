#include "ccca/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ccca/kernels.hpp"

namespace ccca {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Fenwick tree over 1-based integer positions, for the running
// "count of inserted v-ranks <= r" queries.
class BitCounter {
public:
    explicit BitCounter(std::size_t n) : tree_(n + 1, 0) {}

    void insert(std::size_t pos) {
        for (std::size_t i = pos; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
    }

    long long count_leq(std::size_t pos) const {
        long long s = 0;
        for (std::size_t i = pos; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }

private:
    std::vector<long long> tree_;
};

}  // namespace

std::vector<double> average_ranks(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (double& r : ranks) r *= inv_n;
    return ranks;
}

PseudoObservations pseudo_observations(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error("pseudo_observations: length mismatch (" + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw Error("pseudo_observations: need at least 2 samples");
    return {average_ranks(x), average_ranks(y)};
}

double empirical_copula(const PseudoObservations& pobs, double u, double v) {
    const std::size_t n = pobs.u.size();
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (pobs.u[j] <= u && pobs.v[j] <= v) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(n);
}

double frechet_lambda(double c, double u, double v) {
    const double pi = u * v;
    const double num = c - pi;
    const double den = (c >= pi) ? std::min(u, v) - pi : std::max(u + v - 1.0, 0.0) - pi;
    if (std::abs(den) < 1e-14) return 0.0;
    return num / den;
}

namespace {

// absolute Spearman rank correlation of a sub-sample, re-ranked locally
double abs_spearman(std::span<const double> u, std::span<const double> v) {
    const std::vector<double> ru = average_ranks(u);
    const std::vector<double> rv = average_ranks(v);
    const std::size_t n = ru.size();
    double mu = 0.0, mv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mu += ru[i];
        mv += rv[i];
    }
    mu /= static_cast<double>(n);
    mv /= static_cast<double>(n);
    double suv = 0.0, suu = 0.0, svv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = ru[i] - mu;
        const double b = rv[i] - mv;
        suv += a * b;
        suu += a * a;
        svv += b * b;
    }
    const double den = std::sqrt(suu * svv);
    if (den <= 0.0) return 0.0;
    return std::abs(suv / den);
}

}  // namespace

double cos_index(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error("cos_index: length mismatch (" + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()) + ")");
    }
    const std::size_t n = x.size();
    if (n < 10) throw Error("cos_index: need at least 10 samples, got " + std::to_string(n));

    const std::vector<double> u = average_ranks(x);
    const std::vector<double> v = average_ranks(y);

    // integer rank representations (2 * average rank is integral)
    std::vector<long long> ru(n), rv(n);
    const double two_n = 2.0 * static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        ru[i] = std::llround(u[i] * two_n);
        rv[i] = std::llround(v[i] * two_n);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ru[a] != ru[b]) return ru[a] < ru[b];
        return rv[a] < rv[b];
    });

    std::vector<double> us(n), vs(n);
    std::vector<long long> rus(n), rvs(n);
    for (std::size_t j = 0; j < n; ++j) {
        us[j] = u[order[j]];
        vs[j] = v[order[j]];
        rus[j] = ru[order[j]];
        rvs[j] = rv[order[j]];
    }

    // v-rank compression for the Fenwick counter: map 2*rank values to dense
    // 1-based positions
    std::vector<long long> sorted_rv = rvs;
    std::sort(sorted_rv.begin(), sorted_rv.end());
    sorted_rv.erase(std::unique(sorted_rv.begin(), sorted_rv.end()), sorted_rv.end());
    auto v_pos = [&](long long r) {
        return static_cast<std::size_t>(
                   std::lower_bound(sorted_rv.begin(), sorted_rv.end(), r) - sorted_rv.begin()) +
               1;
    };

    // c[j] = n * C_n(u_(j), v_(j)) as integer counts, walking the u-sorted
    // sequence and inserting whole u-tie groups before querying them
    std::vector<long long> c(n);
    BitCounter bit(sorted_rv.size());
    std::size_t g = 0;
    while (g < n) {
        std::size_t ge = g;
        while (ge + 1 < n && rus[ge + 1] == rus[g]) ++ge;
        for (std::size_t j = g; j <= ge; ++j) bit.insert(v_pos(rvs[j]));
        for (std::size_t j = g; j <= ge; ++j) c[j] = bit.count_leq(v_pos(rvs[j]));
        g = ge + 1;
    }

    // candidate domains: maximal monotone stretches of the v-sequence,
    // sharing their boundary points
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    {
        std::size_t start = 0;
        int dir = 0;
        for (std::size_t j = 1; j < n; ++j) {
            const long long d = rvs[j] - rvs[j - 1];
            if (d > 0) {
                if (dir < 0) {
                    cand.emplace_back(start, j - 1);
                    start = j - 1;
                }
                dir = 1;
            } else if (d < 0) {
                if (dir > 0) {
                    cand.emplace_back(start, j - 1);
                    start = j - 1;
                }
                dir = -1;
            }
        }
        cand.emplace_back(start, n - 1);
    }

    // A junction confirms as a local optimum of the underlying relation when
    // the empirical-copula values and the v-ranks of the centered triple move
    // by at most one (resp. two) rank steps and the two adjacent candidate
    // stretches carry more than four points. Noise produces wide rank gaps
    // there, genuine optima of a smooth relation do not.
    std::vector<std::size_t> confirmed;
    for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
        const std::size_t e = cand[i].second;
        if (e < 1 || e + 1 >= n) continue;
        const std::size_t n_left = cand[i].second - cand[i].first + 1;
        const std::size_t n_right = cand[i + 1].second - cand[i + 1].first + 1;
        if (n_left + n_right <= 4) continue;
        if (std::llabs(c[e] - c[e - 1]) > 1 || std::llabs(c[e + 1] - c[e]) > 1) continue;
        if (std::llabs(rvs[e] - rvs[e - 1]) > 4 || std::llabs(rvs[e + 1] - rvs[e]) > 4) continue;
        confirmed.push_back(e);
    }

    std::vector<std::size_t> bounds;
    bounds.push_back(0);
    for (std::size_t e : confirmed) bounds.push_back(e);
    bounds.push_back(n - 1);

    const std::size_t m = bounds.size() - 1;
    double total = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t a = bounds[k];
        const std::size_t b = bounds[k + 1];
        const std::size_t nk = b - a + 1;
        double gamma;
        const bool at_optimum =
            (k > 0) || (k + 1 < m);  // domain touches a confirmed junction
        if (at_optimum) {
            gamma = 1.0;
        } else {
            gamma = abs_spearman(std::span<const double>(us).subspan(a, nk),
                                 std::span<const double>(vs).subspan(a, nk));
        }
        total += static_cast<double>(nk) * gamma;
    }
    const double cos = total / static_cast<double>(n + m - 1);
    return std::clamp(cos, 0.0, 1.0);
}

double kernel_marginal_cdf(std::span<const double> sample, double z, double h) {
    if (sample.size() < 2) throw Error("kernel_marginal_cdf: need at least 2 samples");
    if (!(h > 0.0)) throw Error("kernel_marginal_cdf: bandwidth must be positive");
    return kernels::normal_cdf_sum(sample.data(), sample.size(), z, 1.0 / h) /
           static_cast<double>(sample.size());
}

double bandwidth_h(std::size_t samples, double sigma) {
    return std::pow(4.0 / 3.0, 0.2) * std::pow(static_cast<double>(samples), -0.2) * sigma;
}

double bandwidth_H(std::size_t channels, std::size_t samples, double cap_sigma) {
    const double p = static_cast<double>(channels);
    return std::pow(4.0 / (p + 2.0), 1.0 / (p + 4.0)) *
           std::pow(static_cast<double>(samples), -1.0 / (p + 4.0)) * cap_sigma;
}

double sample_std(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 2) throw Error("sample_std: need at least 2 samples");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double acc = 0.0;
    for (double v : x) {
        const double d = v - mean;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(n - 1));
}

KernelTransform kernel_transform(const SignalMatrix& y) {
    const std::size_t p = y.channels();
    const std::size_t t = y.samples();
    if (t < 2) throw Error("kernel_transform: need at least 2 samples");

    KernelTransform out;
    out.pobs = SignalMatrix(p, t);
    out.h.resize(p);
    out.H.resize(p);

    std::vector<double> transformed(t);
    for (std::size_t i = 0; i < p; ++i) {
        const auto row = y.row(i);
        const double sigma = sample_std(row);
        if (!(sigma > 0.0)) {
            throw Error("kernel_transform: channel " + std::to_string(i) +
                        " is degenerate (zero variance)");
        }
        const double h = bandwidth_h(t, sigma);
        out.h[i] = h;
        const double inv_h = 1.0 / h;
        for (std::size_t k = 0; k < t; ++k) {
            transformed[k] = kernels::normal_cdf_sum(row.data(), t, row[k], inv_h) /
                             static_cast<double>(t);
        }
        const double cap = sample_std(transformed);
        if (!(cap > 0.0)) {
            throw Error("kernel_transform: channel " + std::to_string(i) +
                        " has degenerate pseudo-observations");
        }
        out.H[i] = bandwidth_H(p, t, cap);
        for (std::size_t k = 0; k < t; ++k) out.pobs.at(i, k) = transformed[k];
    }
    return out;
}

Bandwidths bandwidths(const SignalMatrix& y) {
    const KernelTransform kt = kernel_transform(y);
    return {kt.h, kt.H};
}

double kernel_copula_density(const SignalMatrix& pobs, double u1, double u2,
                             const std::vector<double>& H) {
    if (pobs.channels() != 2) {
        throw Error("kernel_copula_density: only p = 2 is supported, got p = " +
                    std::to_string(pobs.channels()));
    }
    if (H.size() != 2 || !(H[0] > 0.0) || !(H[1] > 0.0)) {
        throw Error("kernel_copula_density: invalid bandwidths");
    }
    const std::size_t t = pobs.samples();
    const double sum = kernels::gauss_pair_sum(pobs.row(0).data(), pobs.row(1).data(), t, u1, u2,
                                               1.0 / H[0], 1.0 / H[1]);
    return sum / (static_cast<double>(t) * H[0] * H[1] * 2.0 * kPi);
}

}  // namespace ccca
