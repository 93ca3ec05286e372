#include "ccca/signal.hpp"

#include <cmath>
#include <string>

namespace ccca {

SignalMatrix SignalMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw Error("signal: no channels");
    const std::size_t t = rows.front().size();
    SignalMatrix m(rows.size(), t);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != t) {
            throw Error("signal: channel " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " samples, expected " + std::to_string(t));
        }
        for (std::size_t j = 0; j < t; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void SignalMatrix::validate() const {
    if (p_ < 2) throw Error("signal: need at least 2 channels, got " + std::to_string(p_));
    if (t_ < 10) throw Error("signal: need at least 10 samples, got " + std::to_string(t_));
    for (double v : data_) {
        if (!std::isfinite(v)) throw Error("signal: non-finite sample");
    }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

double SquareMatrix::determinant() const {
    // Gaussian elimination with partial pivoting; n is tiny.
    std::vector<double> a = data_;
    const std::size_t n = n_;
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r * n + c]) > std::abs(a[pivot * n + c])) pivot = r;
        }
        if (a[pivot * n + c] == 0.0) return 0.0;
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[c * n + k]);
            det = -det;
        }
        det *= a[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / a[c * n + c];
            for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
        }
    }
    return det;
}

double SquareMatrix::frobenius_distance(const SquareMatrix& other) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        const double d = data_[i] - other.data_[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

void SquareMatrix::normalize_rows() {
    for (std::size_t i = 0; i < n_; ++i) {
        double norm = 0.0;
        for (std::size_t j = 0; j < n_; ++j) norm += at(i, j) * at(i, j);
        norm = std::sqrt(norm);
        if (norm == 0.0) throw Error("matrix: zero row during normalization");
        for (std::size_t j = 0; j < n_; ++j) at(i, j) /= norm;
    }
}

SignalMatrix SquareMatrix::apply(const SignalMatrix& x) const {
    if (x.channels() != n_) throw Error("matrix: dimension mismatch in apply");
    SignalMatrix y(n_, x.samples());
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const double w = at(i, k);
            if (w == 0.0) continue;
            const auto xr = x.row(k);
            auto yr = y.row(i);
            for (std::size_t t = 0; t < x.samples(); ++t) yr[t] += w * xr[t];
        }
    }
    return y;
}

SquareMatrix SquareMatrix::multiply(const SquareMatrix& other) const {
    if (other.n_ != n_) throw Error("matrix: dimension mismatch in multiply");
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
    return r;
}

}  // namespace ccca
