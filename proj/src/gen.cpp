#include "framesplit/gen.hpp"

#include <cmath>
#include <sstream>

#include "framesplit/errors.hpp"
#include "framesplit/kernels.hpp"
#include "framesplit/rng.hpp"

namespace framesplit {

void GenConfig::validate() const {
    if (dim < 2 || dim > 64)
        throw UsageError("generator dimension must be in 2..64");
    if (count < dim)
        throw UsageError("generator count must be at least the dimension");
    if (!(condition_cap >= 1.0) || !std::isfinite(condition_cap))
        throw UsageError("condition cap must be a finite value >= 1");
}

Frame random_frame(const GenConfig& cfg) {
    cfg.validate();
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        CounterRng rng(CounterRng::derive(cfg.seed, attempt));
        std::vector<std::vector<cplx>> vectors(static_cast<std::size_t>(cfg.count));
        for (auto& v : vectors) {
            v.resize(static_cast<std::size_t>(cfg.dim));
            for (auto& z : v)
                z = rng.complex_gaussian();
        }
        std::ostringstream label;
        label << "random:" << cfg.dim << "," << cfg.count << "," << cfg.seed;
        try {
            Frame fr(cfg.dim, std::move(vectors), label.str());
            if (frame_bounds(fr).ratio() <= cfg.condition_cap)
                return fr;
        } catch (const NotAFrameError&) {
            // fell below the singularity floor; redraw on the next stream
        }
    }
    throw GenerationError("frame generation exhausted 100 attempts; "
                          "try a larger condition_cap");
}

Frame random_parseval(const GenConfig& cfg) {
    return to_parseval(random_frame(cfg));
}

namespace {

std::vector<std::vector<cplx>> real_vectors(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<cplx>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<cplx> v;
        v.reserve(r.size());
        for (double x : r)
            v.emplace_back(x, 0.0);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

Frame named_frame(const std::string& name) {
    if (name == "onb2")
        return Frame(2, real_vectors({{1, 0}, {0, 1}}), "onb2");
    if (name == "double_onb2")
        return Frame(2, real_vectors({{1, 0}, {0, 1}, {1, 0}, {0, 1}}), "double_onb2");
    if (name == "mb3") {
        const double c = std::sqrt(2.0 / 3.0);
        const double h = std::sqrt(3.0) / 2.0;
        return Frame(2, real_vectors({{0.0 * c, 1.0 * c},
                                      {-h * c, -0.5 * c},
                                      {h * c, -0.5 * c}}), "mb3");
    }
    if (name == "weighted_onb")
        return Frame(2, real_vectors({{1, 0}, {1, 0}, {0, 1}}), "weighted_onb");
    std::ostringstream os;
    os << "unknown frame name \"" << name << "\"; catalogue:";
    for (const auto& n : named_frame_catalogue())
        os << " " << n;
    throw UsageError(os.str());
}

std::vector<std::string> named_frame_catalogue() {
    return {"onb2", "double_onb2", "mb3", "weighted_onb"};
}

IndexSubset random_subset(int universe, std::uint64_t seed) {
    if (universe < 1)
        throw UsageError("subset universe must be positive");
    CounterRng rng(CounterRng::derive(seed, 0x5bu));
    std::vector<int> members;
    for (int i = 0; i < universe; ++i)
        if (rng.coin())
            members.push_back(i);
    return IndexSubset(universe, std::move(members));
}

std::vector<cplx> random_unit_vector(int dim, std::uint64_t seed) {
    if (dim < 1)
        throw UsageError("vector dimension must be positive");
    CounterRng rng(CounterRng::derive(seed, 0xfu));
    std::vector<cplx> f(static_cast<std::size_t>(dim));
    double n = 0.0;
    while (n == 0.0) {
        for (auto& z : f)
            z = rng.complex_gaussian();
        n = norm(f);
    }
    kernels::scal(f.size(), cplx{1.0 / n, 0.0}, f.data());
    return f;
}

SplitPair random_split_pair(int dim, std::uint64_t seed) {
    if (dim < 1 || dim > 64)
        throw UsageError("split dimension must be in 1..64");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        CounterRng rng(CounterRng::derive(seed, 0x59u + attempt));
        ComplexMatrix g1(dim, dim);
        ComplexMatrix g2(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                g1.at(i, j) = rng.complex_gaussian();
                g2.at(i, j) = rng.complex_gaussian();
            }
        const HermitianOperator s1 = HermitianOperator::from_matrix(matmul_abh(g1, g1));
        const HermitianOperator s2 = HermitianOperator::from_matrix(matmul_abh(g2, g2));
        const HermitianOperator s = s1 + s2;
        if (s.min_eigenvalue() > tol::singularity_floor * s.max_eigenvalue())
            return SplitPair(s, s1, s2);
    }
    throw GenerationError("split generation exhausted 100 attempts");
}

ComplexMatrix random_complex_matrix(int rows, int cols, std::uint64_t seed, double scale) {
    CounterRng rng(CounterRng::derive(seed, 0xccu));
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = scale * rng.complex_gaussian();
    return m;
}

} // namespace framesplit
