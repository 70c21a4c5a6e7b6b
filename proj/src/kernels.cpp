// Backend selection. The AVX2 variant is used when the binary carries it,
// the CPU reports AVX2+FMA, and FRAMESPLIT_KERNELS does not say otherwise.

#include "framesplit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace framesplit::kernels {

#if defined(FRAMESPLIT_HAVE_AVX2)
const Backend* avx2_backend_impl();   // defined in kernels_avx2.cpp
#endif

const Backend* avx2_backend() {
#if defined(FRAMESPLIT_HAVE_AVX2)
    static const Backend* backend = []() -> const Backend* {
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
            return avx2_backend_impl();
        return nullptr;
    }();
    return backend;
#else
    return nullptr;
#endif
}

const Backend& active_backend() {
    static const Backend& backend = [&]() -> const Backend& {
        const char* env = std::getenv("FRAMESPLIT_KERNELS");
        if (env != nullptr && std::strcmp(env, "scalar") == 0)
            return scalar_backend();
        if (env != nullptr && std::strcmp(env, "avx2") == 0) {
            const Backend* simd = avx2_backend();
            return simd != nullptr ? *simd : scalar_backend();
        }
        const Backend* simd = avx2_backend();
        return simd != nullptr ? *simd : scalar_backend();
    }();
    return backend;
}

} // namespace framesplit::kernels
