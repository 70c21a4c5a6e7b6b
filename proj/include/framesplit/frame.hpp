#ifndef FRAMESPLIT_FRAME_HPP
#define FRAMESPLIT_FRAME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "framesplit/hermitian.hpp"

namespace framesplit {

// Best constants A, B in  A||f||^2 <= sum |<f, f_i>|^2 <= B||f||^2;
// the extreme eigenvalues of the frame operator.
struct FrameBounds {
    double lower;
    double upper;
    double ratio() const { return upper / lower; }
    bool is_parseval(double eps = tol::parseval) const;
};

// An indexed family {f_i} of m >= d vectors spanning C^d. Immutable;
// construction validates spanning via the frame operator's spectrum and
// caches the operator. Inner product convention: <x, y> = sum x_k conj(y_k).
class Frame {
public:
    // `vectors` holds m rows of length d (row i = f_i).
    Frame(int dim, std::vector<std::vector<cplx>> vectors, std::string label = "");

    int dim() const { return dim_; }
    int count() const { return count_; }
    const std::string& label() const { return label_; }

    // f_i as a contiguous row of an m x d matrix.
    const cplx* vector(int i) const { return vectors_.row(i); }
    std::vector<cplx> vector_copy(int i) const;
    const ComplexMatrix& vectors() const { return vectors_; }

    const HermitianOperator& frame_op() const { return op_; }

private:
    int dim_;
    int count_;
    std::string label_;
    ComplexMatrix vectors_;   // m x d, row i = f_i
    HermitianOperator op_;    // S = sum f_i f_i^H
};

enum class DualKind { canonical, alternate };

// A frame together with a dual: f = sum <f, g_i> f_i = sum <f, f_i> g_i.
// Construction verifies both reconstruction formulas on probe vectors.
struct DualPair {
    Frame frame;
    Frame dual;
    DualKind kind;

    DualPair(Frame frame, Frame dual, DualKind kind);
};

// d x m matrix with f_i as columns.
ComplexMatrix synthesis_matrix(const Frame& fr);

// (<f, f_1>, ..., <f, f_m>), i.e. F^H f.
std::vector<cplx> analysis_coefficients(const Frame& fr, const std::vector<cplx>& f);

// S = F F^H; positive definite for a valid frame.
const HermitianOperator& frame_operator(const Frame& fr);

FrameBounds frame_bounds(const Frame& fr);

// Dual vectors S^{-1} f_i.
DualPair canonical_dual(const Frame& fr);

// Vectors S^{-1/2} f_i; the result's frame operator is the identity.
Frame to_parseval(const Frame& fr);

// Dual synthesis G = S^{-1}F + W (I_m - F^H S^{-1} F) with W a d x m
// complex-Gaussian matrix scaled by `perturbation`, drawn deterministically
// from `seed`. perturbation = 0 reproduces the canonical dual.
DualPair random_alternate_dual(const Frame& fr, std::uint64_t seed, double perturbation);

// Worst reconstruction deviation of both dual formulas over deterministic
// unit probes; the dual-pair validation measure.
double dual_reconstruction_deviation(const Frame& fr, const Frame& dual);

// JSON format shared with the CLI:
//   {"dim": d, "count": m, "label": "...", "vectors": [[[re, im], ...], ...]}
// Parsing rejects NaN/Inf and shape mismatches (throws UsageError).
Frame frame_from_json_text(const std::string& text);
std::string frame_to_json_text(const Frame& fr);

} // namespace framesplit

#endif
