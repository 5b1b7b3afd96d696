#include "kernels_impl.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace perfclust::simd {
namespace {

// Two 2-lane registers: lo holds lanes {0,1}, hi holds lanes {2,3}.
double squared_distance(const double* a, const double* b, std::size_t d) noexcept {
    float64x2_t lo = vdupq_n_f64(0.0);
    float64x2_t hi = vdupq_n_f64(0.0);
    std::size_t t = 0;
    for (; t + 4 <= d; t += 4) {
        const float64x2_t d0 = vsubq_f64(vld1q_f64(a + t), vld1q_f64(b + t));
        const float64x2_t d1 = vsubq_f64(vld1q_f64(a + t + 2), vld1q_f64(b + t + 2));
        lo = vaddq_f64(lo, vmulq_f64(d0, d0));
        hi = vaddq_f64(hi, vmulq_f64(d1, d1));
    }
    double lane[4];
    vst1q_f64(lane, lo);
    vst1q_f64(lane + 2, hi);
    for (; t < d; ++t) {
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
    std::size_t t = 0;
    for (; t + 2 <= d; t += 2)
        vst1q_f64(acc + t, vaddq_f64(vld1q_f64(acc + t), vld1q_f64(x + t)));
    for (; t < d; ++t)
        acc[t] += x[t];
}

}  // namespace

namespace detail {
const Kernels* neon_kernels() noexcept {
    static constexpr Kernels kernels{Isa::Neon, &squared_distance, &nearest_centroid, &accumulate};
    return &kernels;
}
}  // namespace detail

}  // namespace perfclust::simd

#else

namespace perfclust::simd::detail {
const Kernels* neon_kernels() noexcept { return nullptr; }
}  // namespace perfclust::simd::detail

#endif
