#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ccca/errors.hpp"

namespace ccca {

// p x T matrix of real samples, one channel per row. Used for sources,
// observations and estimates alike.
class SignalMatrix {
public:
    SignalMatrix() = default;

    SignalMatrix(std::size_t channels, std::size_t samples)
        : p_(channels), t_(samples), data_(channels * samples, 0.0) {}

    static SignalMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t channels() const { return p_; }
    std::size_t samples() const { return t_; }

    double& at(std::size_t ch, std::size_t t) { return data_[ch * t_ + t]; }
    double at(std::size_t ch, std::size_t t) const { return data_[ch * t_ + t]; }

    std::span<double> row(std::size_t ch) { return {data_.data() + ch * t_, t_}; }
    std::span<const double> row(std::size_t ch) const { return {data_.data() + ch * t_, t_}; }

    const std::vector<double>& data() const { return data_; }

    // fails on non-finite entries, p < 2 or T < 10
    void validate() const;

private:
    std::size_t p_ = 0;
    std::size_t t_ = 0;
    std::vector<double> data_;
};

// small dense p x p matrix (p is 2 in practice, kept general)
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static SquareMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    double determinant() const;
    double frobenius_distance(const SquareMatrix& other) const;
    double max_abs() const;

    // divides each row by its Euclidean norm; throws on a zero row
    void normalize_rows();

    SignalMatrix apply(const SignalMatrix& x) const;
    SquareMatrix multiply(const SquareMatrix& other) const;

    bool operator==(const SquareMatrix& other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

}  // namespace ccca
