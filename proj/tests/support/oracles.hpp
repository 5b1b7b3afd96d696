#pragma once

// Reference computations used only by tests. Nothing here calls into the
// library's kernels or clustering routines.

#include "perfclust/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace perfclust::testing {

/// Single-accumulator left-to-right sum of squared differences.
inline double naive_squared_distance(const double* a, const double* b, std::size_t d) {
    long double sum = 0.0L;
    for (std::size_t t = 0; t < d; ++t) {
        const long double diff = static_cast<long double>(a[t]) - static_cast<long double>(b[t]);
        sum += diff * diff;
    }
    return static_cast<double>(sum);
}

/// SSE of a labeling when each cluster is represented by the mean of its
/// members (the optimal centroid for that labeling).
inline double partition_sse(const Matrix& data, const std::vector<std::size_t>& labels, std::size_t k) {
    const std::size_t d = data.cols();
    std::vector<long double> sums(k * d, 0.0L);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        ++counts[labels[i]];
        for (std::size_t t = 0; t < d; ++t)
            sums[labels[i] * d + t] += data(i, t);
    }
    long double sse = 0.0L;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const std::size_t c = labels[i];
        for (std::size_t t = 0; t < d; ++t) {
            const long double diff = data(i, t) - sums[c * d + t] / static_cast<long double>(counts[c]);
            sse += diff * diff;
        }
    }
    return static_cast<double>(sse);
}

/// Global minimum SSE over all k^n labelings (empty clusters allowed, which
/// never beats a labeling that uses them all when k <= n).
inline double brute_force_min_sse(const Matrix& data, std::size_t k) {
    const std::size_t n = data.rows();
    std::vector<std::size_t> labels(n, 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        const double sse = partition_sse(data, labels, k);
        if (sse < best)
            best = sse;
        std::size_t pos = 0;
        while (pos < n && ++labels[pos] == k)
            labels[pos++] = 0;
        if (pos == n)
            break;
    }
    return best;
}

struct BlobFixture {
    Matrix data;
    std::vector<std::size_t> truth;
    double spread = 0.0;      ///< max |offset| per coordinate from the blob center
    double separation = 0.0;  ///< min distance between blob centers
};

/// k blobs with uniform offsets in [-spread, spread]^d. Rows are interleaved
/// (row i belongs to blob i mod k) so the first k rows hit distinct blobs.
inline BlobFixture make_blobs(std::size_t n, std::size_t k, std::size_t d, double spread,
                              double separation, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> offset(-spread, spread);
    BlobFixture f;
    f.spread = spread;
    f.separation = separation;
    f.data = Matrix(n, d);
    // Centers on a line along the first axis.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t blob = i % k;
        f.truth.push_back(blob);
        for (std::size_t t = 0; t < d; ++t)
            f.data(i, t) = (t == 0 ? separation * static_cast<double>(blob) : 0.0) + offset(gen);
    }
    return f;
}

/// Realized separation of a labeled point set: the smallest distance between
/// points of different groups divided by the largest distance from a point to
/// its own group's mean. Infinity when every group is a single repeated point.
inline double separation_ratio(const Matrix& data, const std::vector<std::size_t>& labels, std::size_t k) {
    const std::size_t d = data.cols();
    std::vector<double> means(k * d, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        ++counts[labels[i]];
        for (std::size_t t = 0; t < d; ++t)
            means[labels[i] * d + t] += data(i, t);
    }
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < d; ++t)
            means[j * d + t] /= static_cast<double>(counts[j]);
    double radius = 0.0;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < data.rows(); ++i) {
        radius = std::max(radius, naive_squared_distance(data.row(i).data(), &means[labels[i] * d], d));
        for (std::size_t other = i + 1; other < data.rows(); ++other)
            if (labels[other] != labels[i])
                gap = std::min(gap, naive_squared_distance(data.row(i).data(), data.row(other).data(), d));
    }
    return radius == 0.0 ? std::numeric_limits<double>::infinity() : std::sqrt(gap / radius);
}

inline Matrix random_matrix(std::size_t n, std::size_t d, double lo, double hi, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> value(lo, hi);
    Matrix m(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < d; ++t)
            m(i, t) = value(gen);
    return m;
}

}  // namespace perfclust::testing
