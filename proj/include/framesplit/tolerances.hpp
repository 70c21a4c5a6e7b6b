#ifndef FRAMESPLIT_TOLERANCES_HPP
#define FRAMESPLIT_TOLERANCES_HPP

namespace framesplit {

// All tolerances are relative to max(1, ||S||_2) of the governing operator
// unless stated otherwise. Double precision with dim <= 64 leaves several
// orders of headroom below each of these.
namespace tol {

// Loewner-order margin tolerance: a relation passes when
// margin >= -psd * scale.
inline constexpr double psd = 1e-9;

// Eigendecomposition residual tolerance: ||H v - lambda v|| <= eig * scale.
inline constexpr double eig = 1e-10;

// Maximum allowed ||H - H*||_2 before a Hermitian construction is rejected.
inline constexpr double defect = 1e-12;

// Frames with lambda_min(S) <= singularity_floor * lambda_max(S) are
// rejected: S^{-1} and S^{-1/2} amplify noise as 1/lambda_min.
inline constexpr double singularity_floor = 1e-8;

// Quadratic certificates pass when min over [0,1] >= -certificate.
inline constexpr double certificate = 1e-12;

// A frame counts as Parseval when both bounds are within this of 1.
inline constexpr double parseval = 1e-8;

} // namespace tol

} // namespace framesplit

#endif
