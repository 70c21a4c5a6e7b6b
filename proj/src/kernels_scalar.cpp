#include "framesplit/kernels.hpp"

namespace framesplit::kernels {

namespace {

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += alpha * x[i];
}

cplx dot_u_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

cplx dot_conj_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * std::conj(y[i]);
    return acc;
}

double norm_sq_scalar(std::size_t n, const cplx* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void scal_scalar(std::size_t n, cplx alpha, cplx* x) {
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= alpha;
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar", axpy_scalar, dot_u_scalar, dot_conj_scalar, norm_sq_scalar, scal_scalar,
    };
    return backend;
}

} // namespace framesplit::kernels
