#ifndef FRAMESPLIT_HERMITIAN_HPP
#define FRAMESPLIT_HERMITIAN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "framesplit/complex_matrix.hpp"
#include "framesplit/tolerances.hpp"

namespace framesplit {

// Full eigendecomposition of a Hermitian operator: real eigenvalues in
// ascending order, orthonormal eigenvector columns, deterministic phase
// (first significant component of each column is real positive).
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
    // Spectral norm max|lambda|.
    double norm() const;
};

// Identifies which relation a MarginReport certifies. The short tokens are
// the CLI/report vocabulary; see relation_name().
enum class RelationId {
    loewner,       // generic two-operator comparison
    part1, part2, part3, part4, part5, part6, part7,   // split properties
    t22_lower, t22_middle, t22_upper,                  // mixed-term family
    t27_nonneg, t27_upper,                             // residual-defect family
    t210_lower, t210_upper,                            // square-sum family
    c25_lower, c25_middle, c25_upper,                  // scalar energy family
    parseval_equality, parseval_bound,
    general_equality, general_bound,
    l212,                                              // identity-pair bound
    t213,                                              // alternate-dual bound
    weighted,                                          // weighted dual bound
    scalar_operator_agreement,
};

std::string relation_name(RelationId id);

// Outcome of a Loewner-order check: margin is the minimum eigenvalue of
// (right side - left side); for equality checks it is the negated deviation
// norm, so that `passed <=> margin >= -psd_tol * scale` holds uniformly.
struct MarginReport {
    double margin;
    double scale;        // max(1, ||S||_2) of the governing operator
    bool passed;
    RelationId relation;
    std::optional<double> lambda;

    static MarginReport make(double margin, double scale, RelationId relation,
                             std::optional<double> lambda = std::nullopt,
                             double psd_tol = tol::psd);
};

// Validated Hermitian matrix with cached spectral data. Construction
// symmetrizes via (H + H^H)/2, records the pre-symmetrization defect
// ||H - H^H||_2 and rejects it above defect_tol * max(1, ||H||_2).
class HermitianOperator {
public:
    static HermitianOperator from_matrix(const ComplexMatrix& m,
                                         double defect_tol = tol::defect);
    static HermitianOperator zero(int dim);
    static HermitianOperator identity(int dim);

    int dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double hermitian_defect() const { return defect_; }
    const Spectrum& spectrum() const { return spectrum_; }

    double min_eigenvalue() const { return spectrum_.min(); }
    double max_eigenvalue() const { return spectrum_.max(); }
    // Spectral norm ||H||_2.
    double operator_norm() const { return spectrum_.norm(); }
    // max(1, ||H||_2), the normalization used by every relative tolerance.
    double scale() const;

    friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
    friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
    friend HermitianOperator operator*(double s, const HermitianOperator& a);

private:
    HermitianOperator(ComplexMatrix m, double defect, Spectrum s);

    ComplexMatrix matrix_;
    double defect_;
    Spectrum spectrum_;
};

// Full Hermitian eigendecomposition (cyclic complex Jacobi). Deterministic
// for identical input bits; throws ConvergenceError with the sweep count if
// the off-diagonal mass does not vanish.
Spectrum eig_hermitian(const HermitianOperator& h);

// Eigenvalues of an exactly Hermitian matrix, ascending. Internal building
// block; also used to get spectral norms of differences cheaply.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Spectral norm of an (up to roundoff) Hermitian matrix difference.
double hermitian_spectral_norm(const ComplexMatrix& m);

// sum_k fn(lambda_k) v_k v_k^H. Realizes S^{-1}, S^{+-1/2} and the
// quadratic certificates applied to operators. Throws SpectralDomainError
// when fn is not finite at some eigenvalue.
HermitianOperator spectral_apply(const HermitianOperator& h,
                                 const std::function<double(double)>& fn);

// Common spectral functions.
HermitianOperator inverse(const HermitianOperator& h);
HermitianOperator inv_sqrt(const HermitianOperator& h);
HermitianOperator sqrt(const HermitianOperator& h);

// Loewner comparison U <= V: margin = lambda_min(V - U).
MarginReport loewner_leq(const HermitianOperator& u, const HermitianOperator& v,
                         double scale, RelationId relation = RelationId::loewner,
                         std::optional<double> lambda = std::nullopt,
                         double psd_tol = tol::psd);

// P * X * P, symmetrized. The S^{+-1/2} conjugations that move relations
// between operator space and residual space.
HermitianOperator conjugate(const HermitianOperator& p, const HermitianOperator& x);

} // namespace framesplit

#endif
