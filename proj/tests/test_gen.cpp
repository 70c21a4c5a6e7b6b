#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framesplit/errors.hpp"
#include "framesplit/gen.hpp"
#include "framesplit/inequalities.hpp"

using namespace framesplit;

TEST_CASE("random frames are deterministic per config") {
    const Frame a = random_frame({2, 4, 42, 100.0});
    const Frame b = random_frame({2, 4, 42, 100.0});
    CHECK(max_abs_diff(a.vectors(), b.vectors()) == 0.0);

    const Frame c = random_frame({2, 4, 43, 100.0});
    CHECK(max_abs_diff(a.vectors(), c.vectors()) > 0.0);
}

TEST_CASE("random frames satisfy the condition cap") {
    const Frame fr = random_frame({4, 8, 7, 50.0});
    CHECK(frame_bounds(fr).ratio() <= 50.0);
    CHECK(frame_bounds(fr).lower > 0.0);
}

TEST_CASE("generator rejects bad configs") {
    CHECK_THROWS_AS(random_frame({1, 4, 0}), UsageError);
    CHECK_THROWS_AS(random_frame({65, 70, 0}), UsageError);
    CHECK_THROWS_AS(random_frame({4, 3, 0}), UsageError);
    CHECK_THROWS_AS(random_frame({2, 4, 0, 0.5}), UsageError);
}

TEST_CASE("frame constructors accept generator output across seeds") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 7);
        const int count = dim + static_cast<int>(seed % 5);
        const Frame fr = random_frame({dim, count, seed});
        CHECK(fr.frame_op().min_eigenvalue() > 0.0);
    }
}

TEST_CASE("random Parseval frames resolve the identity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Frame p = random_parseval({3, 6, 940 + seed});
        const FrameBounds b = frame_bounds(p);
        CHECK(std::abs(b.lower - 1.0) <= 1e-9);
        CHECK(std::abs(b.upper - 1.0) <= 1e-9);

        const std::vector<cplx> f = random_unit_vector(3, seed);
        CHECK(norm_sq(analysis_coefficients(p, f)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // square Parseval frames are unitary bases
    const Frame u = random_parseval({2, 2, 3});
    const ComplexMatrix s = matmul_abh(synthesis_matrix(u), synthesis_matrix(u));
    CHECK(max_abs_diff(s, ComplexMatrix::identity(2)) <= 1e-10);
}

TEST_CASE("named frame catalogue") {
    CHECK(frame_bounds(named_frame("mb3")).is_parseval());
    CHECK(frame_bounds(named_frame("double_onb2")).lower == doctest::Approx(2.0));
    CHECK(frame_bounds(named_frame("weighted_onb")).upper == doctest::Approx(2.0));
    CHECK(named_frame("onb2").count() == 2);
    CHECK_THROWS_AS(named_frame("nope"), UsageError);
    CHECK(named_frame_catalogue().size() == 4);
}

TEST_CASE("mb3 passes the Parseval identity across subsets and vectors") {
    const Frame mb3 = named_frame("mb3");
    for (std::uint64_t k = 0; k < 100; ++k) {
        const IndexSubset j = random_subset(3, k);
        const std::vector<cplx> f = random_unit_vector(2, 1000 + k);
        CHECK(verify_parseval_identity(mb3, j, f).all_passed());
    }
}

TEST_CASE("random subsets are deterministic and complementary") {
    const IndexSubset a = random_subset(12, 5);
    const IndexSubset b = random_subset(12, 5);
    CHECK(a.members() == b.members());

    std::vector<int> all = a.members();
    const IndexSubset comp = a.complement();
    for (int i : comp.members())
        all.push_back(i);
    std::sort(all.begin(), all.end());
    CHECK(static_cast<int>(all.size()) == 12);
    for (int i = 0; i < 12; ++i)
        CHECK(all[static_cast<std::size_t>(i)] == i);

    const IndexSubset tiny = random_subset(1, 9);
    CHECK(tiny.members().size() <= 1);
}

TEST_CASE("random unit vectors") {
    const std::vector<cplx> a = random_unit_vector(5, 11);
    CHECK(std::abs(norm(a) - 1.0) <= 1e-14);
    const std::vector<cplx> b = random_unit_vector(5, 11);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
    CHECK(std::abs(std::abs(random_unit_vector(1, 2)[0]) - 1.0) <= 1e-14);
}

TEST_CASE("direct split generation produces valid splits") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const SplitPair sp = random_split_pair(2 + static_cast<int>(seed % 5), seed);
        CHECK(sp.total.min_eigenvalue() > 0.0);
        CHECK(sp.part1.min_eigenvalue() >= -tol::psd * sp.scale());
        CHECK(sp.part2.min_eigenvalue() >= -tol::psd * sp.scale());
    }
    const SplitPair a = random_split_pair(3, 77);
    const SplitPair b = random_split_pair(3, 77);
    CHECK(max_abs_diff(a.total.matrix(), b.total.matrix()) == 0.0);
}
