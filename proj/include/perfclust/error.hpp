#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perfclust {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input data (empty dataset, ragged rows, NaN...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Configuration that cannot be satisfied against the dataset (k = 0, k > n).
class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Two vectors that must share a dimension do not.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

/// CSV ingestion failure. Row and column are 1-based; column 0 means "whole row".
class ParseError : public InvalidInput {
public:
    ParseError(std::size_t row, std::size_t column, const std::string& what)
        : InvalidInput(format(row, column, what)), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::size_t row, std::size_t column, const std::string& what) {
        std::string s = "row " + std::to_string(row);
        if (column != 0)
            s += ", column " + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t row_;
    std::size_t column_;
};

}  // namespace perfclust
