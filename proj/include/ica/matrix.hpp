#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ica {

// Dense square matrix of doubles. Coincidence and distance tables are
// codebook-sized (k rarely above a few dozen), so no sparse tricks.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t k) : k_(k), cells_(k * k, 0.0) {}

    std::size_t size() const { return k_; }

    double& at(std::size_t i, std::size_t j) {
        assert(i < k_ && j < k_);
        return cells_[i * k_ + j];
    }
    double at(std::size_t i, std::size_t j) const {
        assert(i < k_ && j < k_);
        return cells_[i * k_ + j];
    }

    double sum() const {
        double s = 0.0;
        for (double v : cells_) s += v;
        return s;
    }

    double diagonal_sum() const {
        double s = 0.0;
        for (std::size_t i = 0; i < k_; ++i) s += at(i, i);
        return s;
    }

    std::vector<double> row_sums() const {
        std::vector<double> sums(k_, 0.0);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j) sums[i] += at(i, j);
        return sums;
    }

    bool symmetric(double tol = 0.0) const {
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                if (std::abs(at(i, j) - at(j, i)) > tol) return false;
        return true;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t k_ = 0;
    std::vector<double> cells_;
};

} // namespace ica
