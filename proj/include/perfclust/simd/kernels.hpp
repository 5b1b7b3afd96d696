#pragma once

// Data-parallel inner loops of the clustering engine.
//
// Every kernel set (scalar reference, AVX2, NEON) evaluates the squared
// distance in the same reduction order: element t is accumulated into lane
// t % 4, and the lanes are combined as (l0 + l1) + (l2 + l3). No fused
// multiply-add is used anywhere. Consequently all variants are bit-identical,
// and clustering results do not depend on which ISA was selected at run time.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace perfclust::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

struct Nearest {
    std::size_t index;
    double distance;  // squared
};

struct Kernels {
    Isa isa;

    /// Sum over t of (a[t] - b[t])^2.
    double (*squared_distance)(const double* a, const double* b, std::size_t d) noexcept;

    /// Index and squared distance of the closest of k row-major centroids;
    /// ties go to the lowest index. k must be at least 1.
    Nearest (*nearest_centroid)(const double* x, const double* centroids, std::size_t k,
                                std::size_t d) noexcept;

    /// acc[t] += x[t].
    void (*accumulate)(double* acc, const double* x, std::size_t d) noexcept;
};

const Kernels& scalar_kernels() noexcept;

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Throws perfclust::Error when the variant is unavailable.
const Kernels& kernels_for(Isa isa);

/// Best available variant, chosen once per process.
const Kernels& active_kernels() noexcept;

/// All available variants, scalar first.
std::vector<Isa> available_isas();

}  // namespace perfclust::simd
