#include "perfclust/simd/kernels.hpp"

namespace perfclust::simd {
namespace {

double squared_distance(const double* a, const double* b, std::size_t d) noexcept {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t t = 0; t < d; ++t) {
        const double diff = a[t] - b[t];
        lane[t & 3] += diff * diff;
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

Nearest nearest_centroid(const double* x, const double* centroids, std::size_t k,
                         std::size_t d) noexcept {
    Nearest best{0, squared_distance(x, centroids, d)};
    for (std::size_t j = 1; j < k; ++j) {
        const double dist = squared_distance(x, centroids + j * d, d);
        if (dist < best.distance)
            best = {j, dist};
    }
    return best;
}

void accumulate(double* acc, const double* x, std::size_t d) noexcept {
    for (std::size_t t = 0; t < d; ++t)
        acc[t] += x[t];
}

}  // namespace

const Kernels& scalar_kernels() noexcept {
    static constexpr Kernels kernels{Isa::Scalar, &squared_distance, &nearest_centroid, &accumulate};
    return kernels;
}

}  // namespace perfclust::simd
