#include "framesplit/inequalities.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "framesplit/errors.hpp"
#include "framesplit/kernels.hpp"

namespace framesplit {

namespace {

// <X f, f>, real for Hermitian X.
double quadratic_form(const HermitianOperator& x, const std::vector<cplx>& f) {
    return inner(matvec(x.matrix(), f), f).real();
}

// sum_{i in members} c_i f_i accumulated over contiguous frame rows.
std::vector<cplx> coefficient_sum(const Frame& fr, const std::vector<cplx>& coeffs,
                                  const std::vector<int>& members) {
    std::vector<cplx> acc(static_cast<std::size_t>(fr.dim()));
    for (int i : members)
        kernels::axpy(acc.size(), coeffs[static_cast<std::size_t>(i)], fr.vector(i), acc.data());
    return acc;
}

void require_certificate(const QuadraticCertificate& cert, const char* family) {
    // The lambda substitution collapses each certificate to (a - lambda/2)^2,
    // so a failure here means the coefficient map itself is broken.
    if (!certificate_nonneg(cert)) {
        std::ostringstream os;
        os << family << ": certificate unexpectedly negative (c2=" << cert.c2
           << ", c1=" << cert.c1 << ", c0=" << cert.c0 << ")";
        throw ValidationError(os.str());
    }
}

void require_dual(const Frame& fr, const Frame& dual) {
    const double dev = dual_reconstruction_deviation(fr, dual);
    if (dev > tol::psd) {
        std::ostringstream os;
        os << "frames do not form a dual pair: reconstruction deviation " << dev;
        throw PreconditionError(os.str());
    }
}

} // namespace

CoefficientPair lambda_coefficients(LambdaFamily family, double lambda) {
    if (!std::isfinite(lambda))
        throw UsageError("lambda must be finite");
    switch (family) {
        case LambdaFamily::mixed_lower:
            return {lambda - lambda * lambda / 4.0, 1.0 - lambda * lambda / 4.0};
        case LambdaFamily::defect_upper: {
            const double h = 1.0 - lambda / 2.0;
            return {lambda - 1.0, h * h};
        }
        case LambdaFamily::square_sum_lower:
            return {2.0 * lambda - lambda * lambda / 2.0 - 1.0,
                    1.0 - lambda * lambda / 2.0};
    }
    throw UsageError("unknown lambda family");
}

MixedBoundsReport verify_mixed_bounds(const SplitPair& sp, double lambda, double psd_tol) {
    const auto [p, q] = lambda_coefficients(LambdaFamily::mixed_lower, lambda);
    const QuadraticCertificate cert = part5_certificate(p, q);
    require_certificate(cert, "mixed bounds");

    const double scale = sp.scale();
    const HermitianOperator sinv = inverse(sp.total);
    const HermitianOperator a1 = conjugate(sp.part1, sinv);
    const HermitianOperator a2 = conjugate(sp.part2, sinv);
    const HermitianOperator mixed = sp.part2 + a1;

    const MarginReport lower = loewner_leq(p * sp.part1 + q * sp.part2, mixed, scale,
                                           RelationId::t22_lower, lambda, psd_tol);
    const double dev =
        hermitian_spectral_norm(mixed.matrix() - (sp.part1.matrix() + a2.matrix()));
    const MarginReport middle =
        MarginReport::make(-dev, scale, RelationId::t22_middle, lambda, psd_tol);
    const MarginReport upper =
        loewner_leq(mixed, sp.total, scale, RelationId::t22_upper, lambda, psd_tol);
    return MixedBoundsReport{lower, middle, upper, cert};
}

ResidualDefectReport verify_residual_defect_bounds(const SplitPair& sp, double lambda,
                                                   double psd_tol) {
    const auto [p, q] = lambda_coefficients(LambdaFamily::defect_upper, lambda);
    const QuadraticCertificate cert = part6_certificate(p, q);
    require_certificate(cert, "residual defect bounds");

    const double scale = sp.scale();
    const HermitianOperator sinv = inverse(sp.total);
    const HermitianOperator defect = sp.part1 - conjugate(sp.part1, sinv);

    const MarginReport nonneg =
        loewner_leq(HermitianOperator::zero(sp.total.dim()), defect, scale,
                    RelationId::t27_nonneg, lambda, psd_tol);
    const MarginReport upper = loewner_leq(defect, p * sp.part2 + q * sp.total, scale,
                                           RelationId::t27_upper, lambda, psd_tol);
    return ResidualDefectReport{nonneg, upper, cert};
}

SquareSumReport verify_square_sum_bounds(const SplitPair& sp, double lambda, double psd_tol) {
    const auto [p, q] = lambda_coefficients(LambdaFamily::square_sum_lower, lambda);
    const QuadraticCertificate cert = part7_certificate(p, q);
    require_certificate(cert, "square sum bounds");

    const double scale = sp.scale();
    const HermitianOperator sinv = inverse(sp.total);
    const HermitianOperator squares =
        conjugate(sp.part1, sinv) + conjugate(sp.part2, sinv);

    const MarginReport lower = loewner_leq(p * sp.part1 + q * sp.part2, squares, scale,
                                           RelationId::t210_lower, lambda, psd_tol);
    const MarginReport upper = loewner_leq(squares, sp.total, scale,
                                           RelationId::t210_upper, lambda, psd_tol);
    return SquareSumReport{lower, upper, cert};
}

ScalarBreakdown scalar_breakdown(const Frame& fr, const IndexSubset& j,
                                 const std::vector<cplx>& f) {
    if (j.universe() != fr.count())
        throw UsageError("subset universe does not match frame count");
    const std::vector<cplx> coeffs = analysis_coefficients(fr, f);
    const IndexSubset jc = j.complement();

    ScalarBreakdown bd{0.0, 0.0, 0.0, 0.0, 0.0};
    for (int i : j.members())
        bd.sum_j += std::norm(coeffs[static_cast<std::size_t>(i)]);
    for (int i : jc.members())
        bd.sum_jc += std::norm(coeffs[static_cast<std::size_t>(i)]);
    bd.sum_total = kernels::norm_sq(coeffs.size(), coeffs.data());

    // S^{-1} S_J f with S_J f built from coefficients, not matrices.
    const HermitianOperator sinv = inverse(fr.frame_op());
    const std::vector<cplx> zj = matvec(sinv.matrix(), coefficient_sum(fr, coeffs, j.members()));
    const std::vector<cplx> zjc = matvec(sinv.matrix(), coefficient_sum(fr, coeffs, jc.members()));
    bd.dual_energy_j = norm_sq(analysis_coefficients(fr, zj));
    bd.dual_energy_jc = norm_sq(analysis_coefficients(fr, zjc));
    return bd;
}

EnergyBoundsReport verify_energy_bounds(const Frame& fr, const IndexSubset& j,
                                        const std::vector<cplx>& f, double lambda,
                                        double psd_tol) {
    const auto [p, q] = lambda_coefficients(LambdaFamily::mixed_lower, lambda);
    require_certificate(part5_certificate(p, q), "energy bounds");

    const ScalarBreakdown bd = scalar_breakdown(fr, j, f);
    const double scale = std::max(1.0, bd.sum_total);
    const double mixed_j = bd.sum_jc + bd.dual_energy_j;
    const double mixed_jc = bd.sum_j + bd.dual_energy_jc;

    const MarginReport lower =
        MarginReport::make(mixed_j - (p * bd.sum_j + q * bd.sum_jc), scale,
                           RelationId::c25_lower, lambda, psd_tol);
    const MarginReport middle = MarginReport::make(-std::abs(mixed_j - mixed_jc), scale,
                                                   RelationId::c25_middle, lambda, psd_tol);
    const MarginReport upper = MarginReport::make(bd.sum_total - mixed_jc, scale,
                                                  RelationId::c25_upper, lambda, psd_tol);

    // Translation-table cross-check: the same five numbers as quadratic
    // forms of the operator route.
    const HermitianOperator& s = fr.frame_op();
    const HermitianOperator sinv = inverse(s);
    const HermitianOperator sj = partial_frame_operator(fr, j);
    const HermitianOperator sjc = partial_frame_operator(fr, j.complement());
    const HermitianOperator aj = conjugate(sj, sinv);
    const HermitianOperator ajc = conjugate(sjc, sinv);
    double dev = std::abs(bd.sum_j - quadratic_form(sj, f));
    dev = std::max(dev, std::abs(bd.sum_jc - quadratic_form(sjc, f)));
    dev = std::max(dev, std::abs(bd.sum_total - quadratic_form(s, f)));
    dev = std::max(dev, std::abs(bd.dual_energy_j - quadratic_form(aj, f)));
    dev = std::max(dev, std::abs(bd.dual_energy_jc - quadratic_form(ajc, f)));

    return EnergyBoundsReport{bd, lower, middle, upper, dev};
}

IdentityReport verify_parseval_identity(const Frame& fr, const IndexSubset& j,
                                        const std::vector<cplx>& f, double psd_tol) {
    const FrameBounds b = frame_bounds(fr);
    if (!b.is_parseval()) {
        std::ostringstream os;
        os << "frame is not Parseval: measured bounds (" << b.lower << ", " << b.upper << ")";
        throw PreconditionError(os.str());
    }
    if (j.universe() != fr.count())
        throw UsageError("subset universe does not match frame count");

    const std::vector<cplx> coeffs = analysis_coefficients(fr, f);
    const IndexSubset jc = j.complement();
    double sum_j = 0.0;
    double sum_jc = 0.0;
    for (int i : j.members())
        sum_j += std::norm(coeffs[static_cast<std::size_t>(i)]);
    for (int i : jc.members())
        sum_jc += std::norm(coeffs[static_cast<std::size_t>(i)]);

    const double side1 = sum_j + norm_sq(coefficient_sum(fr, coeffs, jc.members()));
    const double side2 = sum_jc + norm_sq(coefficient_sum(fr, coeffs, j.members()));
    const double energy = norm_sq(f);
    const double bound_rhs = 0.75 * energy;
    const double scale = std::max(1.0, energy);

    const MarginReport equality = MarginReport::make(
        -std::abs(side1 - side2), scale, RelationId::parseval_equality, std::nullopt, psd_tol);
    const MarginReport bound = MarginReport::make(
        std::min(side1, side2) - bound_rhs, scale, RelationId::parseval_bound,
        std::nullopt, psd_tol);
    return IdentityReport{side1, side2, bound_rhs, equality, bound};
}

IdentityReport verify_general_identity(const Frame& fr, const IndexSubset& j,
                                       const std::vector<cplx>& f, double psd_tol) {
    if (j.universe() != fr.count())
        throw UsageError("subset universe does not match frame count");
    const DualPair dp = canonical_dual(fr);
    const std::vector<cplx> coeffs = analysis_coefficients(fr, f);
    const IndexSubset jc = j.complement();

    double sum_j = 0.0;
    double sum_jc = 0.0;
    for (int i : j.members())
        sum_j += std::norm(coeffs[static_cast<std::size_t>(i)]);
    for (int i : jc.members())
        sum_jc += std::norm(coeffs[static_cast<std::size_t>(i)]);
    const double sum_total = kernels::norm_sq(coeffs.size(), coeffs.data());

    // sum_I |<S_J f, g_i>|^2 with S_J f assembled from coefficients.
    const std::vector<cplx> yj = coefficient_sum(fr, coeffs, j.members());
    const std::vector<cplx> yjc = coefficient_sum(fr, coeffs, jc.members());
    const double dual_energy_j = norm_sq(analysis_coefficients(dp.dual, yj));
    const double dual_energy_jc = norm_sq(analysis_coefficients(dp.dual, yjc));

    const double side1 = sum_j + dual_energy_jc;
    const double side2 = sum_jc + dual_energy_j;
    const double bound_rhs = 0.75 * sum_total;
    const double scale = std::max(1.0, sum_total);

    const MarginReport equality = MarginReport::make(
        -std::abs(side1 - side2), scale, RelationId::general_equality, std::nullopt, psd_tol);
    const MarginReport bound = MarginReport::make(
        std::min(side1, side2) - bound_rhs, scale, RelationId::general_bound,
        std::nullopt, psd_tol);
    return IdentityReport{side1, side2, bound_rhs, equality, bound};
}

MarginReport identity_pair_lower_bound(const ComplexMatrix& u, const ComplexMatrix& v,
                                       double lambda, double psd_tol) {
    if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
        throw UsageError("identity pair: operators must be square and same size");
    if (!std::isfinite(lambda))
        throw UsageError("lambda must be finite");
    const ComplexMatrix eye = ComplexMatrix::identity(u.rows());
    const double dev = (u + v - eye).frobenius_norm();
    const double pre_tol =
        psd_tol * std::max(1.0, u.frobenius_norm() + v.frobenius_norm());
    if (dev > pre_tol) {
        std::ostringstream os;
        os << "U + V is not the identity: ||U + V - I||_F = " << dev;
        throw PreconditionError(os.str());
    }
    // U^H U + lambda (V^H + V) - lambda (2 - lambda) I, Hermitian by
    // construction even for non-normal U, V.
    const ComplexMatrix m = matmul(u.adjoint(), u) + cplx{lambda, 0.0} * (v.adjoint() + v) -
                            cplx{lambda * (2.0 - lambda), 0.0} * eye;
    const std::vector<double> ev = hermitian_eigenvalues(m);
    const double scale = std::max({1.0, std::abs(ev.front()), std::abs(ev.back())});
    return MarginReport::make(ev.front(), scale, RelationId::l212, lambda, psd_tol);
}

DualSideQuantities dual_side_quantities(const Frame& fr, const Frame& dual,
                                        const IndexSubset& j, const std::vector<cplx>& f) {
    require_dual(fr, dual);
    if (j.universe() != fr.count())
        throw UsageError("subset universe does not match frame count");
    const std::vector<cplx> cf = analysis_coefficients(fr, f);
    const std::vector<cplx> cg = analysis_coefficients(dual, f);
    const IndexSubset jc = j.complement();

    DualSideQuantities q{0.0, 0.0, 0.0, 0.0};
    for (int i : j.members())
        q.re_j += (cg[static_cast<std::size_t>(i)] * std::conj(cf[static_cast<std::size_t>(i)])).real();
    for (int i : jc.members())
        q.re_jc += (cg[static_cast<std::size_t>(i)] * std::conj(cf[static_cast<std::size_t>(i)])).real();
    q.norm_sq_j = norm_sq(coefficient_sum(fr, cg, j.members()));
    q.norm_sq_jc = norm_sq(coefficient_sum(fr, cg, jc.members()));
    return q;
}

DualBoundReport verify_dual_bound(const Frame& fr, const Frame& dual,
                                  const IndexSubset& j, const std::vector<cplx>& f,
                                  double lambda, double psd_tol) {
    const DualSideQuantities q = dual_side_quantities(fr, dual, j, f);
    const double lhs = q.re_j + q.norm_sq_jc;
    const double rhs = (2.0 * lambda - lambda * lambda) * q.re_j +
                       (1.0 - lambda * lambda) * q.re_jc;
    const double scale = std::max(1.0, norm_sq(f));
    const MarginReport bound =
        MarginReport::make(lhs - rhs, scale, RelationId::t213, lambda, psd_tol);
    return DualBoundReport{q, lhs, rhs, bound};
}

WeightedBoundReport verify_weighted_dual_bound(const Frame& fr, const Frame& dual,
                                               const std::vector<cplx>& weights,
                                               const std::vector<cplx>& f, double lambda,
                                               double psd_tol) {
    require_dual(fr, dual);
    if (static_cast<int>(weights.size()) != fr.count())
        throw UsageError("weight count does not match frame count");
    for (const cplx& w : weights)
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw UsageError("weights must be finite");

    const std::vector<cplx> cf = analysis_coefficients(fr, f);
    const std::vector<cplx> cg = analysis_coefficients(dual, f);

    WeightedBoundReport out{0.0, 0.0, 0.0, 0.0, 0.0,
                            MarginReport{0.0, 1.0, false, RelationId::weighted, lambda}};
    std::vector<cplx> uvec(f.size());
    for (int i = 0; i < fr.count(); ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const cplx t = cg[k] * std::conj(cf[k]);
        out.re_weighted += ((1.0 - weights[k]) * t).real();
        out.re_complement += (weights[k] * t).real();
        kernels::axpy(uvec.size(), weights[k] * cg[k], fr.vector(i), uvec.data());
    }
    out.norm_sq_weighted = norm_sq(uvec);
    out.lhs = out.re_weighted + out.norm_sq_weighted;
    out.rhs = (2.0 * lambda - lambda * lambda) * out.re_weighted +
              (1.0 - lambda * lambda) * out.re_complement;
    const double scale = std::max(1.0, norm_sq(f));
    out.bound = MarginReport::make(out.lhs - out.rhs, scale, RelationId::weighted,
                                   lambda, psd_tol);
    return out;
}

std::string report_to_json_line(const MarginReport& r, const ReportInputs& inputs,
                                const std::string& outcome) {
    nlohmann::ordered_json j;
    j["relation"] = relation_name(r.relation);
    if (r.lambda.has_value())
        j["lambda"] = *r.lambda;
    j["margin"] = r.margin;
    j["scale"] = r.scale;
    j["passed"] = r.passed;
    if (!outcome.empty())
        j["outcome"] = outcome;
    j["inputs"] = nlohmann::ordered_json{{"frame_label", inputs.frame_label},
                                         {"subset", inputs.subset},
                                         {"seed", inputs.seed}};
    return j.dump();
}

} // namespace framesplit
