// AVX2+FMA variants: two interleaved complex doubles per 256-bit register.
// Compiled with -mavx2 -mfma; only ever called through the dispatch table
// after a CPU feature probe.

#include "framesplit/kernels.hpp"

#if defined(FRAMESPLIT_HAVE_AVX2)

#include <immintrin.h>

namespace framesplit::kernels {

namespace {

inline const double* as_d(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_d(cplx* p) { return reinterpret_cast<double*>(p); }

// Horizontal reduction of two packed complex accumulators to one cplx.
inline cplx reduce_c2(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(as_d(x + i));
        __m256d vy = _mm256_loadu_pd(as_d(y + i));
        __m256d xswap = _mm256_permute_pd(vx, 0x5);          // [xi, xr]
        __m256d t = _mm256_mul_pd(ai, xswap);                // [ai*xi, ai*xr]
        __m256d term = _mm256_fmaddsub_pd(ar, vx, t);        // [ar*xr - ai*xi, ar*xi + ai*xr]
        _mm256_storeu_pd(as_d(y + i), _mm256_add_pd(vy, term));
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

cplx dot_u_avx2(std::size_t n, const cplx* x, const cplx* y) {
    __m256d acc1 = _mm256_setzero_pd();   // sums [xr*yr, xr*yi]
    __m256d acc2 = _mm256_setzero_pd();   // sums [xi*yi, xi*yr]
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(as_d(x + i));
        __m256d vy = _mm256_loadu_pd(as_d(y + i));
        acc1 = _mm256_fmadd_pd(_mm256_movedup_pd(vx), vy, acc1);
        acc2 = _mm256_fmadd_pd(_mm256_unpackhi_pd(vx, vx), _mm256_permute_pd(vy, 0x5), acc2);
    }
    // even: acc1 - acc2 = xr*yr - xi*yi; odd: acc1 + acc2 = xr*yi + xi*yr
    cplx acc = reduce_c2(_mm256_addsub_pd(acc1, acc2));
    for (; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

cplx dot_conj_avx2(std::size_t n, const cplx* x, const cplx* y) {
    __m256d acc1 = _mm256_setzero_pd();   // sums [yr*xr, yr*xi]
    __m256d acc2 = _mm256_setzero_pd();   // sums -[yi*xi, yi*xr]
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(as_d(x + i));
        __m256d vy = _mm256_loadu_pd(as_d(y + i));
        acc1 = _mm256_fmadd_pd(_mm256_movedup_pd(vy), vx, acc1);
        acc2 = _mm256_fnmadd_pd(_mm256_unpackhi_pd(vy, vy), _mm256_permute_pd(vx, 0x5), acc2);
    }
    // even: acc1 - acc2 = xr*yr + xi*yi; odd: acc1 + acc2 = xi*yr - xr*yi
    cplx acc = reduce_c2(_mm256_addsub_pd(acc1, acc2));
    for (; i < n; ++i)
        acc += x[i] * std::conj(y[i]);
    return acc;
}

double norm_sq_avx2(std::size_t n, const cplx* x) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(as_d(x + i));
        acc = _mm256_fmadd_pd(vx, vx, acc);
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    s = _mm_add_sd(s, _mm_unpackhi_pd(s, s));
    double total = _mm_cvtsd_f64(s);
    for (; i < n; ++i)
        total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return total;
}

void scal_avx2(std::size_t n, cplx alpha, cplx* x) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(as_d(x + i));
        __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vx, 0x5));
        _mm256_storeu_pd(as_d(x + i), _mm256_fmaddsub_pd(ar, vx, t));
    }
    for (; i < n; ++i)
        x[i] *= alpha;
}

} // namespace

const Backend* avx2_backend_impl() {
    static const Backend backend{
        "avx2", axpy_avx2, dot_u_avx2, dot_conj_avx2, norm_sq_avx2, scal_avx2,
    };
    return &backend;
}

} // namespace framesplit::kernels

#endif // FRAMESPLIT_HAVE_AVX2
