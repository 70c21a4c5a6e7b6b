#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "framesplit/kernels.hpp"
#include "framesplit/rng.hpp"

using namespace framesplit;
using kernels::Backend;
using kernels::cplx;

namespace {

std::vector<cplx> random_array(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<cplx> v(n);
    for (auto& z : v)
        z = rng.complex_gaussian();
    return v;
}

constexpr std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 33, 64, 67};

} // namespace

TEST_CASE("scalar kernels match hand values") {
    const Backend& k = kernels::scalar_backend();
    const std::vector<cplx> x{{1.0, 2.0}, {3.0, -1.0}};
    const std::vector<cplx> y{{0.5, 0.0}, {0.0, 1.0}};

    // dot_u: (1+2i)(0.5) + (3-i)(i) = 0.5 + i + 3i + 1 = 1.5 + 4i
    const cplx du = k.dot_u(2, x.data(), y.data());
    CHECK(du.real() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(du.imag() == doctest::Approx(4.0).epsilon(1e-15));

    // dot_conj: (1+2i)(0.5) + (3-i)(-i) = 0.5 + i - 3i - 1 = -0.5 - 2i
    const cplx dc = k.dot_conj(2, x.data(), y.data());
    CHECK(dc.real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(dc.imag() == doctest::Approx(-2.0).epsilon(1e-15));

    CHECK(k.norm_sq(2, x.data()) == doctest::Approx(15.0).epsilon(1e-15));

    std::vector<cplx> yc = y;
    k.axpy(2, cplx{2.0, 1.0}, x.data(), yc.data());   // y + (2+i) x
    CHECK(yc[0].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(yc[0].imag() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(yc[1].real() == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(yc[1].imag() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("dot_conj with itself is a real norm") {
    const Backend& k = kernels::active_backend();
    for (std::size_t n : kSizes) {
        const auto x = random_array(n, 100 + n);
        const cplx d = k.dot_conj(n, x.data(), x.data());
        CHECK(d.imag() == 0.0);
        CHECK(d.real() == doctest::Approx(k.norm_sq(n, x.data())).epsilon(1e-14));
    }
}

TEST_CASE("avx2 backend agrees with the scalar reference") {
    const Backend* simd = kernels::avx2_backend();
    if (simd == nullptr)
        return;   // nothing to compare on this machine
    const Backend& ref = kernels::scalar_backend();

    for (std::size_t n : kSizes) {
        const auto x = random_array(n, 2 * n + 1);
        const auto y = random_array(n, 2 * n + 2);
        const cplx alpha = {0.7, -1.3};

        const cplx du_s = ref.dot_u(n, x.data(), y.data());
        const cplx du_v = simd->dot_u(n, x.data(), y.data());
        CHECK(std::abs(du_s - du_v) <= 1e-13 * (1.0 + std::abs(du_s)));

        const cplx dc_s = ref.dot_conj(n, x.data(), y.data());
        const cplx dc_v = simd->dot_conj(n, x.data(), y.data());
        CHECK(std::abs(dc_s - dc_v) <= 1e-13 * (1.0 + std::abs(dc_s)));

        CHECK(ref.norm_sq(n, x.data()) ==
              doctest::Approx(simd->norm_sq(n, x.data())).epsilon(1e-13));

        std::vector<cplx> ys = y;
        std::vector<cplx> yv = y;
        ref.axpy(n, alpha, x.data(), ys.data());
        simd->axpy(n, alpha, x.data(), yv.data());
        std::vector<cplx> xs = x;
        std::vector<cplx> xv = x;
        ref.scal(n, alpha, xs.data());
        simd->scal(n, alpha, xv.data());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(ys[i] - yv[i]) <= 1e-13 * (1.0 + std::abs(ys[i])));
            CHECK(std::abs(xs[i] - xv[i]) <= 1e-13 * (1.0 + std::abs(xs[i])));
        }
    }
}

TEST_CASE("gram products are bitwise Hermitian on both backends") {
    // dot_conj(x, y) must equal conj(dot_conj(y, x)) exactly; the Hermitian
    // fast path in operator construction relies on it.
    std::vector<const Backend*> backends{&kernels::scalar_backend()};
    if (kernels::avx2_backend() != nullptr)
        backends.push_back(kernels::avx2_backend());
    for (const Backend* k : backends) {
        for (std::size_t n : kSizes) {
            const auto x = random_array(n, 3 * n + 1);
            const auto y = random_array(n, 3 * n + 2);
            const cplx a = k->dot_conj(n, x.data(), y.data());
            const cplx b = k->dot_conj(n, y.data(), x.data());
            CHECK(a.real() == b.real());
            CHECK(a.imag() == -b.imag());
        }
    }
}

TEST_CASE("active backend is one of the registered backends") {
    const Backend& active = kernels::active_backend();
    const bool is_scalar = &active == &kernels::scalar_backend();
    const bool is_avx2 = kernels::avx2_backend() != nullptr && &active == kernels::avx2_backend();
    CHECK((is_scalar || is_avx2));
}
