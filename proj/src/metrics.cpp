#include "ccca/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>

namespace ccca {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double abs_correlation(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) throw Error("metrics: zero-variance channel");
    return std::abs(sab / std::sqrt(saa * sbb));
}

// all permutations of {0..p-1} in lexicographic order; p is tiny
void for_each_permutation(std::size_t p, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

ChannelAssignment match_sources(const SignalMatrix& estimates, const SignalMatrix& sources) {
    if (estimates.channels() != sources.channels() || estimates.samples() != sources.samples()) {
        throw Error("match_sources: shape mismatch");
    }
    const std::size_t p = sources.channels();
    if (p > 8) throw Error("match_sources: too many channels for exhaustive matching");

    std::vector<std::vector<double>> corr(p, std::vector<double>(p));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            corr[i][j] = abs_correlation(sources.row(i), estimates.row(j));
        }
    }

    std::vector<std::size_t> best;
    double best_score = -1.0;
    for_each_permutation(p, [&](const std::vector<std::size_t>& perm) {
        double score = 0.0;
        for (std::size_t i = 0; i < p; ++i) score += corr[i][perm[i]];
        if (score > best_score + 1e-15) {  // strict improvement keeps the first (lowest) tie
            best_score = score;
            best = perm;
        }
    });

    ChannelAssignment out;
    out.permutation = best;
    out.gains.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        const auto y = estimates.row(best[i]);
        const double yy = dot(y, y);
        if (yy <= 0.0) throw Error("metrics: zero-energy channel");
        out.gains[i] = dot(sources.row(i), y) / yy;
    }
    return out;
}

std::vector<double> snr_db(const SignalMatrix& estimates, const SignalMatrix& sources,
                           const ChannelAssignment& assignment) {
    const std::size_t p = sources.channels();
    if (assignment.permutation.size() != p || assignment.gains.size() != p) {
        throw Error("snr_db: assignment shape mismatch");
    }
    constexpr double kCapDb = 300.0;
    std::vector<double> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        const auto s = sources.row(i);
        const auto y = estimates.row(assignment.permutation[i]);
        const double g = assignment.gains[i];
        double sig = 0.0, err = 0.0;
        for (std::size_t t = 0; t < s.size(); ++t) {
            const double e = s[t] - g * y[t];
            sig += s[t] * s[t];
            err += e * e;
        }
        if (err <= 0.0) {
            out[i] = kCapDb;
        } else {
            out[i] = std::min(kCapDb, 10.0 * std::log10(sig / err));
        }
    }
    return out;
}

double isr(const SquareMatrix& gain) {
    const std::size_t p = gain.size();
    if (p > 8) throw Error("isr: too many channels for exhaustive alignment");

    // row permutation maximizing the product of |diagonal| entries
    std::vector<std::size_t> best;
    double best_score = -1.0;
    for_each_permutation(p, [&](const std::vector<std::size_t>& perm) {
        double score = 1.0;
        for (std::size_t i = 0; i < p; ++i) score *= std::abs(gain.at(perm[i], i));
        if (score > best_score + 1e-300) {
            best_score = score;
            best = perm;
        }
    });

    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        const double d = gain.at(best[i], i);
        if (d == 0.0) {
            // no alignment puts a nonzero entry here; count the raw row power
            for (std::size_t j = 0; j < p; ++j) {
                const double v = gain.at(best[i], j);
                if (j == i) diag += 0.0;
                else off += v * v;
            }
            continue;
        }
        for (std::size_t j = 0; j < p; ++j) {
            const double v = gain.at(best[i], j) / d;
            if (j == i) diag += v * v;
            else off += v * v;
        }
    }
    if (diag <= 0.0) return std::numeric_limits<double>::infinity();
    return off / diag;
}

}  // namespace ccca
