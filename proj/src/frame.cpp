#include "framesplit/frame.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "framesplit/errors.hpp"
#include "framesplit/kernels.hpp"
#include "framesplit/rng.hpp"

namespace framesplit {

namespace {

ComplexMatrix rows_from_vectors(int dim, const std::vector<std::vector<cplx>>& vectors) {
    if (dim <= 0)
        throw UsageError("frame dimension must be positive");
    if (vectors.empty())
        throw UsageError("frame needs at least one vector");
    ComplexMatrix rows(static_cast<int>(vectors.size()), dim);
    for (int i = 0; i < rows.rows(); ++i) {
        const auto& v = vectors[static_cast<std::size_t>(i)];
        if (static_cast<int>(v.size()) != dim)
            throw UsageError("frame vector length does not match dimension");
        for (int k = 0; k < dim; ++k)
            rows.at(i, k) = v[static_cast<std::size_t>(k)];
    }
    if (!rows.all_finite())
        throw UsageError("frame vectors must have finite entries");
    return rows;
}

// S = F F^H built from the contiguous synthesis rows; bitwise Hermitian.
HermitianOperator gram_operator(const ComplexMatrix& vectors_rows) {
    const ComplexMatrix synth = vectors_rows.transpose();   // d x m
    return HermitianOperator::from_matrix(matmul_abh(synth, synth));
}

void validate_spanning(const HermitianOperator& op, int dim, int count,
                       const std::string& label) {
    const double lo = op.min_eigenvalue();
    const double hi = op.max_eigenvalue();
    if (count < dim || hi <= 0.0 || lo <= tol::singularity_floor * hi) {
        std::ostringstream os;
        os << "vectors do not span the space (measured bounds " << lo << ", " << hi
           << ", count " << count << ", dim " << dim;
        if (!label.empty())
            os << ", label \"" << label << "\"";
        os << ")";
        throw NotAFrameError(os.str());
    }
}

std::vector<cplx> probe_vector(int dim, std::uint64_t stream) {
    CounterRng rng(CounterRng::derive(0x70b3u, stream));
    std::vector<cplx> f(static_cast<std::size_t>(dim));
    for (auto& z : f)
        z = rng.complex_gaussian();
    const double n = norm(f);
    kernels::scal(f.size(), cplx{1.0 / n, 0.0}, f.data());
    return f;
}

} // namespace

bool FrameBounds::is_parseval(double eps) const {
    return std::abs(lower - 1.0) <= eps && std::abs(upper - 1.0) <= eps;
}

Frame::Frame(int dim, std::vector<std::vector<cplx>> vectors, std::string label)
    : dim_(dim),
      count_(static_cast<int>(vectors.size())),
      label_(std::move(label)),
      vectors_(rows_from_vectors(dim, vectors)),
      op_(gram_operator(vectors_)) {
    validate_spanning(op_, dim_, count_, label_);
}

std::vector<cplx> Frame::vector_copy(int i) const {
    if (i < 0 || i >= count_)
        throw UsageError("frame vector index out of range");
    return std::vector<cplx>(vectors_.row(i), vectors_.row(i) + dim_);
}

double dual_reconstruction_deviation(const Frame& fr, const Frame& dual) {
    if (fr.dim() != dual.dim() || fr.count() != dual.count())
        throw UsageError("dual pair: shape mismatch");
    double worst = 0.0;
    // Both reconstruction formulas on deterministic unit probes.
    for (std::uint64_t k = 0; k < 4; ++k) {
        const std::vector<cplx> f = probe_vector(fr.dim(), k);
        const std::vector<cplx> cf = analysis_coefficients(fr, f);
        const std::vector<cplx> cg = analysis_coefficients(dual, f);
        std::vector<cplx> r1(f.size());
        std::vector<cplx> r2(f.size());
        for (int i = 0; i < fr.count(); ++i) {
            kernels::axpy(f.size(), cg[static_cast<std::size_t>(i)], fr.vector(i), r1.data());
            kernels::axpy(f.size(), cf[static_cast<std::size_t>(i)], dual.vector(i), r2.data());
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            r1[i] -= f[i];
            r2[i] -= f[i];
        }
        worst = std::max({worst, norm(r1), norm(r2)});
    }
    return worst;
}

DualPair::DualPair(Frame frame_in, Frame dual_in, DualKind kind_in)
    : frame(std::move(frame_in)), dual(std::move(dual_in)), kind(kind_in) {
    const double dev = dual_reconstruction_deviation(frame, dual);
    if (dev > tol::psd) {
        std::ostringstream os;
        os << "frames do not form a dual pair: reconstruction deviation " << dev;
        throw PreconditionError(os.str());
    }
}

ComplexMatrix synthesis_matrix(const Frame& fr) {
    return fr.vectors().transpose();
}

std::vector<cplx> analysis_coefficients(const Frame& fr, const std::vector<cplx>& f) {
    if (static_cast<int>(f.size()) != fr.dim())
        throw UsageError("analysis: vector length does not match frame dimension");
    std::vector<cplx> c(static_cast<std::size_t>(fr.count()));
    for (int i = 0; i < fr.count(); ++i)
        c[static_cast<std::size_t>(i)] = kernels::dot_conj(f.size(), f.data(), fr.vector(i));
    return c;
}

const HermitianOperator& frame_operator(const Frame& fr) {
    return fr.frame_op();
}

FrameBounds frame_bounds(const Frame& fr) {
    return FrameBounds{fr.frame_op().min_eigenvalue(), fr.frame_op().max_eigenvalue()};
}

namespace {

Frame frame_from_synthesis(const ComplexMatrix& synth, int dim, std::string label) {
    return Frame(dim, [&] {
        std::vector<std::vector<cplx>> vecs(static_cast<std::size_t>(synth.cols()));
        for (int i = 0; i < synth.cols(); ++i) {
            auto& v = vecs[static_cast<std::size_t>(i)];
            v.resize(static_cast<std::size_t>(dim));
            for (int r = 0; r < dim; ++r)
                v[static_cast<std::size_t>(r)] = synth.at(r, i);
        }
        return vecs;
    }(), std::move(label));
}

} // namespace

DualPair canonical_dual(const Frame& fr) {
    const HermitianOperator sinv = inverse(fr.frame_op());
    const ComplexMatrix g = matmul(sinv.matrix(), synthesis_matrix(fr));
    Frame dual = frame_from_synthesis(g, fr.dim(), fr.label().empty() ? "" : fr.label() + ":dual");
    return DualPair(fr, std::move(dual), DualKind::canonical);
}

Frame to_parseval(const Frame& fr) {
    const HermitianOperator r = inv_sqrt(fr.frame_op());
    const ComplexMatrix g = matmul(r.matrix(), synthesis_matrix(fr));
    return frame_from_synthesis(g, fr.dim(),
                                fr.label().empty() ? "" : fr.label() + ":parseval");
}

DualPair random_alternate_dual(const Frame& fr, std::uint64_t seed, double perturbation) {
    if (!std::isfinite(perturbation) || perturbation < 0.0)
        throw UsageError("perturbation must be finite and nonnegative");
    const HermitianOperator sinv = inverse(fr.frame_op());
    const ComplexMatrix f = synthesis_matrix(fr);
    ComplexMatrix g = matmul(sinv.matrix(), f);
    if (perturbation > 0.0) {
        // G = S^{-1}F + W (I_m - F^H S^{-1} F); the second factor projects
        // onto the kernel of F, so F G^H = I_d stays exact.
        const int m = fr.count();
        ComplexMatrix proj = ComplexMatrix::identity(m) - matmul(f.adjoint(), g);
        CounterRng rng(CounterRng::derive(seed, 0xa17du));
        ComplexMatrix w(fr.dim(), m);
        for (int i = 0; i < w.rows(); ++i)
            for (int j = 0; j < w.cols(); ++j)
                w.at(i, j) = perturbation * rng.complex_gaussian();
        g = g + matmul(w, proj);
    }
    Frame dual = frame_from_synthesis(g, fr.dim(),
                                      fr.label().empty() ? "" : fr.label() + ":altdual");
    return DualPair(fr, std::move(dual), DualKind::alternate);
}

Frame frame_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("frame JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors"))
        throw UsageError("frame JSON must be an object with \"dim\" and \"vectors\"");
    if (!j["dim"].is_number_integer())
        throw UsageError("frame JSON: \"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    const auto& jv = j["vectors"];
    if (!jv.is_array() || jv.empty())
        throw UsageError("frame JSON: \"vectors\" must be a non-empty array");
    if (j.contains("count") &&
        (!j["count"].is_number_integer() || j["count"].get<int>() != static_cast<int>(jv.size())))
        throw UsageError("frame JSON: \"count\" does not match the vector list");
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string())
            throw UsageError("frame JSON: \"label\" must be a string");
        label = j["label"].get<std::string>();
    }
    std::vector<std::vector<cplx>> vectors;
    vectors.reserve(jv.size());
    for (const auto& row : jv) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw UsageError("frame JSON: each vector must list exactly dim entries");
        std::vector<cplx> v;
        v.reserve(row.size());
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2 ||
                !entry[0].is_number() || !entry[1].is_number())
                throw UsageError("frame JSON: entries must be [re, im] number pairs");
            const double re = entry[0].get<double>();
            const double im = entry[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw UsageError("frame JSON: entries must be finite");
            v.emplace_back(re, im);
        }
        vectors.push_back(std::move(v));
    }
    return Frame(dim, std::move(vectors), std::move(label));
}

std::string frame_to_json_text(const Frame& fr) {
    nlohmann::json jv = nlohmann::json::array();
    for (int i = 0; i < fr.count(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < fr.dim(); ++k) {
            const cplx z = fr.vector(i)[k];
            row.push_back(nlohmann::json::array({z.real(), z.imag()}));
        }
        jv.push_back(std::move(row));
    }
    nlohmann::json j{
        {"dim", fr.dim()},
        {"count", fr.count()},
        {"label", fr.label()},
        {"vectors", std::move(jv)},
    };
    return j.dump();
}

} // namespace framesplit
