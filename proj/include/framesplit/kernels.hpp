#ifndef FRAMESPLIT_KERNELS_HPP
#define FRAMESPLIT_KERNELS_HPP

#include <complex>
#include <cstddef>

// Data-parallel inner loops for interleaved complex<double> arrays.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant processing two complex doubles per register. The active
// backend is chosen once at startup (CPU feature probe, overridable with
// FRAMESPLIT_KERNELS=scalar|avx2|auto) and the variants are equivalence-
// tested against the scalar reference in tests/test_kernels.cpp.

namespace framesplit::kernels {

using cplx = std::complex<double>;

struct Backend {
    const char* name;
    // y[i] += alpha * x[i]
    void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
    // sum_i x[i] * y[i]
    cplx (*dot_u)(std::size_t n, const cplx* x, const cplx* y);
    // sum_i x[i] * conj(y[i])
    cplx (*dot_conj)(std::size_t n, const cplx* x, const cplx* y);
    // sum_i |x[i]|^2
    double (*norm_sq)(std::size_t n, const cplx* x);
    // x[i] *= alpha
    void (*scal)(std::size_t n, cplx alpha, cplx* x);
};

// Reference implementation, always available.
const Backend& scalar_backend();

// AVX2+FMA variant; nullptr when not compiled in or not supported by the CPU.
const Backend* avx2_backend();

// Backend selected at startup. Reads FRAMESPLIT_KERNELS once.
const Backend& active_backend();

// Convenience forwarding wrappers used throughout the library.
inline void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    active_backend().axpy(n, alpha, x, y);
}
inline cplx dot_u(std::size_t n, const cplx* x, const cplx* y) {
    return active_backend().dot_u(n, x, y);
}
inline cplx dot_conj(std::size_t n, const cplx* x, const cplx* y) {
    return active_backend().dot_conj(n, x, y);
}
inline double norm_sq(std::size_t n, const cplx* x) {
    return active_backend().norm_sq(n, x);
}
inline void scal(std::size_t n, cplx alpha, cplx* x) {
    active_backend().scal(n, alpha, x);
}

} // namespace framesplit::kernels

#endif
