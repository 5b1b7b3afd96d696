#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace perfclust {

/// Dense row-major matrix of doubles. Holds data points (one per row) and
/// centroid sets alike.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    /// Builds from nested rows. Throws InvalidInput on ragged input, and on
    /// zero rows or zero columns.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {values_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) noexcept { return {values_.data() + i * cols_, cols_}; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * cols_ + j]; }

    const double* data() const noexcept { return values_.data(); }
    double* data() noexcept { return values_.data(); }
    const std::vector<double>& values() const noexcept { return values_; }

    /// Copy of the selected rows, in the given order.
    Matrix select_rows(std::span<const std::size_t> indices) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

}  // namespace perfclust
