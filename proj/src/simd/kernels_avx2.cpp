// Compiled with -mavx2 (and without -mfma) when the target is x86-64.
#include "kernels_impl.hpp"

#if defined(PERFCLUST_HAVE_AVX2)

#include <immintrin.h>

namespace perfclust::simd {
namespace {

// Lanes 0..3 of the accumulator correspond to the scalar reference's lane[t & 3].
inline __m256d accumulate_squares(const double* a, const double* b, std::size_t d) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t t = 0;
    for (; t + 4 <= d; t += 4) {
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    if (t < d) {
        // Masked-off lanes load +0.0, contributing (0 - 0)^2 = +0.0.
        const std::size_t rest = d - t;
        const __m256i mask = _mm256_setr_epi64x(-1, rest > 1 ? -1 : 0, rest > 2 ? -1 : 0, 0);
        const __m256d diff =
            _mm256_sub_pd(_mm256_maskload_pd(a + t, mask), _mm256_maskload_pd(b + t, mask));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    return acc;
}

inline double reduce(__m256d acc) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(acc);   // l0 l1
    const __m128d hi = _mm256_extractf128_pd(acc, 1);  // l2 l3
    const __m128d pair_lo = _mm_add_sd(lo, _mm_unpackhi_pd(lo, lo));
    const __m128d pair_hi = _mm_add_sd(hi, _mm_unpackhi_pd(hi, hi));
    return _mm_cvtsd_f64(_mm_add_sd(pair_lo, pair_hi));
}

double squared_distance(const double* a, const double* b, std::size_t d) noexcept {
    return reduce(accumulate_squares(a, b, d));
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
    for (; t + 4 <= d; t += 4)
        _mm256_storeu_pd(acc + t, _mm256_add_pd(_mm256_loadu_pd(acc + t), _mm256_loadu_pd(x + t)));
    for (; t < d; ++t)
        acc[t] += x[t];
}

}  // namespace

namespace detail {
const Kernels* avx2_kernels() noexcept {
    static constexpr Kernels kernels{Isa::Avx2, &squared_distance, &nearest_centroid, &accumulate};
    return &kernels;
}
}  // namespace detail

}  // namespace perfclust::simd

#else

namespace perfclust::simd::detail {
const Kernels* avx2_kernels() noexcept { return nullptr; }
}  // namespace perfclust::simd::detail

#endif
