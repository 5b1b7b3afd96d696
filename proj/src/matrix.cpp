#include "perfclust/matrix.hpp"

#include "perfclust/error.hpp"

#include <string>
#include <utility>

namespace perfclust {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_)
        throw InvalidInput("matrix storage holds " + std::to_string(values_.size()) +
                           " values, expected " + std::to_string(rows_ * cols_));
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        throw InvalidInput("dataset has no rows");
    const std::size_t cols = rows.front().size();
    if (cols == 0)
        throw InvalidInput("dataset rows have zero columns");
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InvalidInput("ragged rows: row " + std::to_string(i + 1) + " has " +
                               std::to_string(rows[i].size()) + " values, expected " +
                               std::to_string(cols));
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return Matrix(rows.size(), cols, std::move(values));
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const auto src = row(indices[r]);
        std::copy(src.begin(), src.end(), out.row(r).begin());
    }
    return out;
}

}  // namespace perfclust
