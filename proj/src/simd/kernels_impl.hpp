#pragma once

#include "perfclust/simd/kernels.hpp"

// Per-ISA entry points. The non-scalar ones return nullptr when the variant
// was not compiled for this target.
namespace perfclust::simd::detail {

const Kernels* avx2_kernels() noexcept;
const Kernels* neon_kernels() noexcept;

}  // namespace perfclust::simd::detail
