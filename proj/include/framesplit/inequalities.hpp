#ifndef FRAMESPLIT_INEQUALITIES_HPP
#define FRAMESPLIT_INEQUALITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framesplit/splitting.hpp"

namespace framesplit {

// The three lambda-parametrized inequality families. Each maps lambda to a
// coefficient pair (p, q) whose certificate collapses to (a - lambda/2)^2.
enum class LambdaFamily {
    mixed_lower,       // (lambda - lambda^2/4) S1 + (1 - lambda^2/4) S2 <= S2 + S1 S^-1 S1
    defect_upper,      // S1 - S1 S^-1 S1 <= (lambda - 1) S2 + (1 - lambda/2)^2 S
    square_sum_lower,  // (2 lambda - lambda^2/2 - 1) S1 + (1 - lambda^2/2) S2 <= S1 S^-1 S1 + S2 S^-1 S2
};

struct CoefficientPair {
    double p;
    double q;
};

CoefficientPair lambda_coefficients(LambdaFamily family, double lambda);

// t22: lower bound, middle equality, upper bound around S2 + S1 S^{-1} S1.
struct MixedBoundsReport {
    MarginReport lower;
    MarginReport middle;    // margin = -deviation norm
    MarginReport upper;
    QuadraticCertificate certificate;
    bool all_passed() const { return lower.passed && middle.passed && upper.passed; }
};
MixedBoundsReport verify_mixed_bounds(const SplitPair& sp, double lambda,
                                      double psd_tol = tol::psd);

// t27: 0 <= S1 - S1 S^{-1} S1 <= (lambda-1) S2 + (1 - lambda/2)^2 S.
struct ResidualDefectReport {
    MarginReport nonneg;
    MarginReport upper;
    QuadraticCertificate certificate;
    bool all_passed() const { return nonneg.passed && upper.passed; }
};
ResidualDefectReport verify_residual_defect_bounds(const SplitPair& sp, double lambda,
                                                   double psd_tol = tol::psd);

// t210: lower and upper bounds around S1 S^{-1} S1 + S2 S^{-1} S2.
struct SquareSumReport {
    MarginReport lower;
    MarginReport upper;
    QuadraticCertificate certificate;
    bool all_passed() const { return lower.passed && upper.passed; }
};
SquareSumReport verify_square_sum_bounds(const SplitPair& sp, double lambda,
                                         double psd_tol = tol::psd);

// The five scalar quantities of the translation table, computed from
// analysis coefficients and vector sums (never from operator matrices).
struct ScalarBreakdown {
    double sum_j;            // sum_{i in J}   |<f, f_i>|^2
    double sum_jc;           // sum_{i in J^c} |<f, f_i>|^2
    double sum_total;        // sum_{i in I}   |<f, f_i>|^2
    double dual_energy_j;    // sum_{i in I} |<S^{-1} S_J   f, f_i>|^2
    double dual_energy_jc;   // sum_{i in I} |<S^{-1} S_J^c f, f_i>|^2
};
ScalarBreakdown scalar_breakdown(const Frame& fr, const IndexSubset& j,
                                 const std::vector<cplx>& f);

// c25: scalar form of the mixed-term family, plus the cross-check of every
// scalar against its operator quadratic form at f.
struct EnergyBoundsReport {
    ScalarBreakdown breakdown;
    MarginReport lower;
    MarginReport middle;    // margin = -deviation
    MarginReport upper;
    double scalar_operator_max_dev;   // worst |scalar - <X f, f>| over the table
    bool all_passed() const { return lower.passed && middle.passed && upper.passed; }
};
EnergyBoundsReport verify_energy_bounds(const Frame& fr, const IndexSubset& j,
                                        const std::vector<cplx>& f, double lambda,
                                        double psd_tol = tol::psd);

// Balance identity + 3/4 bound for a Parseval frame:
//   sum_J |<f,f_i>|^2 + ||sum_{J^c} <f,f_i> f_i||^2
//     = sum_{J^c} |<f,f_i>|^2 + ||sum_J <f,f_i> f_i||^2  >=  (3/4)||f||^2.
// Throws PreconditionError naming the measured bounds when fr is not
// Parseval.
struct IdentityReport {
    double side1;
    double side2;
    double bound_rhs;        // (3/4) * reference energy
    MarginReport equality;   // margin = -|side1 - side2|
    MarginReport bound;      // margin = min(side) - bound_rhs
    bool all_passed() const { return equality.passed && bound.passed; }
};
IdentityReport verify_parseval_identity(const Frame& fr, const IndexSubset& j,
                                        const std::vector<cplx>& f,
                                        double psd_tol = tol::psd);

// General-frame version using canonical-dual energies:
//   sum_J |<f,f_i>|^2 + sum_I |<S_{J^c} f, g_i>|^2
//     = sum_{J^c} |<f,f_i>|^2 + sum_I |<S_J f, g_i>|^2
//     >= (3/4) sum_I |<f,f_i>|^2,   g = canonical dual.
IdentityReport verify_general_identity(const Frame& fr, const IndexSubset& j,
                                       const std::vector<cplx>& f,
                                       double psd_tol = tol::psd);

// For any bounded U, V with U + V = I (not necessarily Hermitian):
//   U^H U + lambda (V^H + V) >= lambda (2 - lambda) I.
// margin = lambda_min of the Hermitian difference. Throws
// PreconditionError with the deviation norm when U + V is far from I.
MarginReport identity_pair_lower_bound(const ComplexMatrix& u, const ComplexMatrix& v,
                                       double lambda, double psd_tol = tol::psd);

// Scalars of the alternate-dual inequality at (f, J):
struct DualSideQuantities {
    double re_j;          // Re sum_{i in J}   <f, g_i> conj<f, f_i>
    double re_jc;         // Re sum_{i in J^c} <f, g_i> conj<f, f_i>
    double norm_sq_j;     // ||sum_{i in J}   <f, g_i> f_i||^2
    double norm_sq_jc;    // ||sum_{i in J^c} <f, g_i> f_i||^2
};
DualSideQuantities dual_side_quantities(const Frame& fr, const Frame& dual,
                                        const IndexSubset& j, const std::vector<cplx>& f);

// t213: re_J + norm_sq_Jc >= (2 lambda - lambda^2) re_J + (1 - lambda^2) re_Jc.
struct DualBoundReport {
    DualSideQuantities quantities;
    double lhs;
    double rhs;
    MarginReport bound;
};
DualBoundReport verify_dual_bound(const Frame& fr, const Frame& dual,
                                  const IndexSubset& j, const std::vector<cplx>& f,
                                  double lambda, double psd_tol = tol::psd);

// Weighted generalization over the full index set: with
//   Uf = sum_i a_i <f, g_i> f_i,  Vf = sum_i (1 - a_i) <f, g_i> f_i
// (so U + V = I exactly), checks
//   Re sum (1-a_i)<f,g_i>conj<f,f_i> + ||sum a_i <f,g_i> f_i||^2
//     >= (2l - l^2) Re sum (1-a_i)<f,g_i>conj<f,f_i>
//      + (1 - l^2)  Re sum a_i <f,g_i>conj<f,f_i>.
// Indicator weights a_i = 1_{J^c} reproduce verify_dual_bound exactly.
struct WeightedBoundReport {
    double re_weighted;        // Re sum (1-a_i) <f,g_i> conj<f,f_i>
    double re_complement;      // Re sum a_i     <f,g_i> conj<f,f_i>
    double norm_sq_weighted;   // ||sum a_i <f,g_i> f_i||^2
    double lhs;
    double rhs;
    MarginReport bound;
};
WeightedBoundReport verify_weighted_dual_bound(const Frame& fr, const Frame& dual,
                                               const std::vector<cplx>& weights,
                                               const std::vector<cplx>& f, double lambda,
                                               double psd_tol = tol::psd);

// One line of the line-delimited report stream:
//   {"relation": ..., "lambda": ..., "margin": m, "scale": s, "passed": b,
//    "inputs": {"frame_label": ..., "subset": ..., "seed": ...}}
struct ReportInputs {
    std::string frame_label;
    std::string subset;
    std::uint64_t seed = 0;
};
std::string report_to_json_line(const MarginReport& r, const ReportInputs& inputs,
                                const std::string& outcome = "");

} // namespace framesplit

#endif
