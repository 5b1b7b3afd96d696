#include "kernels_impl.hpp"
#include "perfclust/error.hpp"

#include <string>

namespace perfclust::simd {
namespace {

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(PERFCLUST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::Neon:
        // Advanced SIMD is mandatory on AArch64.
        return detail::neon_kernels() != nullptr;
    }
    return false;
}

const Kernels* compiled(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return &scalar_kernels();
    case Isa::Avx2:
        return detail::avx2_kernels();
    case Isa::Neon:
        return detail::neon_kernels();
    }
    return nullptr;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    case Isa::Neon:
        return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept { return compiled(isa) != nullptr && cpu_supports(isa); }

const Kernels& kernels_for(Isa isa) {
    if (!isa_available(isa))
        throw Error("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
    return *compiled(isa);
}

const Kernels& active_kernels() noexcept {
    static const Kernels& chosen = [] () -> const Kernels& {
        for (Isa isa : {Isa::Avx2, Isa::Neon})
            if (isa_available(isa))
                return *compiled(isa);
        return scalar_kernels();
    }();
    return chosen;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
        if (isa_available(isa))
            out.push_back(isa);
    return out;
}

}  // namespace perfclust::simd
