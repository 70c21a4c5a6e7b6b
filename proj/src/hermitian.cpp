#include "framesplit/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "framesplit/errors.hpp"
#include "framesplit/kernels.hpp"

namespace framesplit {

namespace {

constexpr int kMaxSweeps = 60;
// Off-diagonal mass target relative to the Frobenius norm. Jacobi converges
// quadratically, so this costs one or two extra sweeps over a loose target.
constexpr double kOffTarget = 1e-15;

double offdiag_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j)
                s += std::norm(a.at(i, j));
    return s;
}

struct JacobiOutput {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // columns, or 1x1 placeholder when skipped
    int sweeps;
};

// Cyclic complex Jacobi on an exactly Hermitian matrix. One rotation zeroes
// a(p,q): with a(p,q) = |b| e^{i phi}, the rotation is the real Jacobi
// rotation for the 2x2 block [[app, |b|], [|b|, aqq]] carried on the phase.
JacobiOutput jacobi_eig(ComplexMatrix a, bool want_vectors) {
    const int n = a.rows();
    ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix(1, 1);
    const double eps = std::numeric_limits<double>::epsilon();

    int sweep = 0;
    bool converged = false;
    for (; sweep < kMaxSweeps; ++sweep) {
        const double frob = a.frobenius_norm();
        const double off = std::sqrt(offdiag_norm_sq(a));
        if (off <= kOffTarget * std::max(frob, 1e-300)) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx beta = a.at(p, q);
                const double absb = std::abs(beta);
                if (absb == 0.0)
                    continue;
                const double alpha = a.at(p, p).real();
                const double gamma = a.at(q, q).real();
                // A rotation this small cannot move the spectrum; drop it.
                if (100.0 * absb <= eps * (std::abs(alpha) + std::abs(gamma))) {
                    a.at(p, q) = 0.0;
                    a.at(q, p) = 0.0;
                    continue;
                }
                const double tau = (gamma - alpha) / (2.0 * absb);
                double t;
                if (std::isinf(tau)) {
                    t = 0.0;
                } else if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = (t * c) * (beta / absb);
                const cplx sconj = std::conj(s);

                // A <- A J (columns p, q), J = [[c, s], [-conj(s), c]]
                for (int i = 0; i < n; ++i) {
                    const cplx ap = a.at(i, p);
                    const cplx aq = a.at(i, q);
                    a.at(i, p) = c * ap - sconj * aq;
                    a.at(i, q) = s * ap + c * aq;
                }
                // A <- J^H A (rows p, q)
                for (int j = 0; j < n; ++j) {
                    const cplx ap = a.at(p, j);
                    const cplx aq = a.at(q, j);
                    a.at(p, j) = c * ap - s * aq;
                    a.at(q, j) = sconj * ap + c * aq;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = a.at(p, p).real();
                a.at(q, q) = a.at(q, q).real();

                if (want_vectors) {
                    for (int i = 0; i < n; ++i) {
                        const cplx vp = v.at(i, p);
                        const cplx vq = v.at(i, q);
                        v.at(i, p) = c * vp - sconj * vq;
                        v.at(i, q) = s * vp + c * vq;
                    }
                }
            }
        }
    }
    if (!converged) {
        std::ostringstream os;
        os << "Hermitian eigensolver did not converge after " << sweep << " sweeps";
        throw ConvergenceError(os.str(), sweep);
    }

    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        diag[static_cast<std::size_t>(i)] = a.at(i, i).real();

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[static_cast<std::size_t>(x)] <
                                                diag[static_cast<std::size_t>(y)]; });

    JacobiOutput out{std::vector<double>(static_cast<std::size_t>(n)),
                     want_vectors ? ComplexMatrix(n, n) : ComplexMatrix(1, 1), sweep};
    for (int k = 0; k < n; ++k)
        out.values[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];

    if (want_vectors) {
        for (int k = 0; k < n; ++k) {
            const int src = order[static_cast<std::size_t>(k)];
            // Canonical phase: first significant component real positive.
            cplx phase = 1.0;
            for (int i = 0; i < n; ++i) {
                const cplx z = v.at(i, src);
                if (std::abs(z) > 1e-6) {
                    phase = std::conj(z) / std::abs(z);
                    break;
                }
            }
            for (int i = 0; i < n; ++i)
                out.vectors.at(i, k) = phase * v.at(i, src);
        }
    }
    return out;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
    const int n = m.rows();
    ComplexMatrix s(n, n);
    for (int i = 0; i < n; ++i) {
        s.at(i, i) = m.at(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cplx z = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
            s.at(i, j) = z;
            s.at(j, i) = std::conj(z);
        }
    }
    return s;
}

// ||M - M^H||_F, no allocation.
double defect_frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        s += 4.0 * m.at(i, i).imag() * m.at(i, i).imag();
        for (int j = i + 1; j < m.cols(); ++j)
            s += 2.0 * std::norm(m.at(i, j) - std::conj(m.at(j, i)));
    }
    return std::sqrt(s);
}

// ||M - M^H||_2 exactly: the difference is anti-Hermitian, so its spectral
// norm is the largest |eigenvalue| of the Hermitian matrix i (M - M^H).
double defect_spectral(const ComplexMatrix& m) {
    const int n = m.rows();
    ComplexMatrix h(n, n);
    const cplx iu{0.0, 1.0};
    for (int i = 0; i < n; ++i) {
        h.at(i, i) = -2.0 * m.at(i, i).imag();
        for (int j = i + 1; j < n; ++j) {
            const cplx z = iu * (m.at(i, j) - std::conj(m.at(j, i)));
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    const std::vector<double> ev = jacobi_eig(h, false).values;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

} // namespace

double Spectrum::norm() const {
    return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

std::string relation_name(RelationId id) {
    switch (id) {
        case RelationId::loewner: return "loewner";
        case RelationId::part1: return "part1";
        case RelationId::part2: return "part2";
        case RelationId::part3: return "part3";
        case RelationId::part4: return "part4";
        case RelationId::part5: return "part5";
        case RelationId::part6: return "part6";
        case RelationId::part7: return "part7";
        case RelationId::t22_lower: return "t22_lower";
        case RelationId::t22_middle: return "t22_middle";
        case RelationId::t22_upper: return "t22_upper";
        case RelationId::t27_nonneg: return "t27_nonneg";
        case RelationId::t27_upper: return "t27_upper";
        case RelationId::t210_lower: return "t210_lower";
        case RelationId::t210_upper: return "t210_upper";
        case RelationId::c25_lower: return "c25_lower";
        case RelationId::c25_middle: return "c25_middle";
        case RelationId::c25_upper: return "c25_upper";
        case RelationId::parseval_equality: return "parseval_equality";
        case RelationId::parseval_bound: return "parseval_bound";
        case RelationId::general_equality: return "general_equality";
        case RelationId::general_bound: return "general_bound";
        case RelationId::l212: return "l212";
        case RelationId::t213: return "t213";
        case RelationId::weighted: return "weighted";
        case RelationId::scalar_operator_agreement: return "scalar_operator_agreement";
    }
    return "unknown";
}

MarginReport MarginReport::make(double margin, double scale, RelationId relation,
                                std::optional<double> lambda, double psd_tol) {
    if (scale < 1.0)
        throw UsageError("margin report scale must be >= 1");
    return MarginReport{margin, scale, margin >= -psd_tol * scale, relation, lambda};
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double defect, Spectrum s)
    : matrix_(std::move(m)), defect_(defect), spectrum_(std::move(s)) {}

HermitianOperator HermitianOperator::from_matrix(const ComplexMatrix& m, double defect_tol) {
    if (m.rows() != m.cols())
        throw UsageError("Hermitian operator requires a square matrix");
    if (!m.all_finite())
        throw UsageError("Hermitian operator entries must be finite");

    ComplexMatrix sym = symmetrized(m);
    JacobiOutput jac = jacobi_eig(sym, true);
    Spectrum spec{std::move(jac.values), std::move(jac.vectors)};
    const double scale = std::max(1.0, spec.norm());

    double defect = defect_frobenius(m);
    if (defect > defect_tol * scale) {
        // The Frobenius value is only an upper bound; decide on the exact norm.
        defect = defect_spectral(m);
        if (defect > defect_tol * scale) {
            std::ostringstream os;
            os << "input is not Hermitian: ||H - H*||_2 = " << defect
               << " exceeds " << defect_tol << " * " << scale;
            throw ValidationError(os.str());
        }
    }
    return HermitianOperator(std::move(sym), defect, std::move(spec));
}

HermitianOperator HermitianOperator::zero(int dim) {
    ComplexMatrix m(dim, dim);
    Spectrum s{std::vector<double>(static_cast<std::size_t>(dim), 0.0),
               ComplexMatrix::identity(dim)};
    return HermitianOperator(std::move(m), 0.0, std::move(s));
}

HermitianOperator HermitianOperator::identity(int dim) {
    Spectrum s{std::vector<double>(static_cast<std::size_t>(dim), 1.0),
               ComplexMatrix::identity(dim)};
    return HermitianOperator(ComplexMatrix::identity(dim), 0.0, std::move(s));
}

double HermitianOperator::scale() const {
    return std::max(1.0, operator_norm());
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator::from_matrix(a.matrix() + b.matrix());
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator::from_matrix(a.matrix() - b.matrix());
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
    return HermitianOperator::from_matrix(cplx{s, 0.0} * a.matrix());
}

Spectrum eig_hermitian(const HermitianOperator& h) {
    return h.spectrum();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw UsageError("eigenvalues require a square matrix");
    return jacobi_eig(symmetrized(m), false).values;
}

double hermitian_spectral_norm(const ComplexMatrix& m) {
    const std::vector<double> ev = hermitian_eigenvalues(m);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

HermitianOperator spectral_apply(const HermitianOperator& h,
                                 const std::function<double(double)>& fn) {
    const Spectrum& spec = h.spectrum();
    const int n = h.dim();
    std::vector<double> mapped(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double lambda = spec.eigenvalues[static_cast<std::size_t>(k)];
        const double y = fn(lambda);
        if (!std::isfinite(y)) {
            std::ostringstream os;
            os << "spectral function undefined at eigenvalue " << lambda
               << " (index " << k << ")";
            throw SpectralDomainError(os.str(), lambda, k);
        }
        mapped[static_cast<std::size_t>(k)] = y;
    }
    // sum_k fn(l_k) v_k v_k^H = (V diag) V^H
    ComplexMatrix w = spec.eigenvectors;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            w.at(i, k) *= mapped[static_cast<std::size_t>(k)];
    return HermitianOperator::from_matrix(matmul_abh(w, spec.eigenvectors));
}

HermitianOperator inverse(const HermitianOperator& h) {
    return spectral_apply(h, [](double x) { return 1.0 / x; });
}

HermitianOperator inv_sqrt(const HermitianOperator& h) {
    return spectral_apply(h, [](double x) { return 1.0 / std::sqrt(x); });
}

HermitianOperator sqrt(const HermitianOperator& h) {
    return spectral_apply(h, [](double x) { return std::sqrt(x); });
}

MarginReport loewner_leq(const HermitianOperator& u, const HermitianOperator& v,
                         double scale, RelationId relation,
                         std::optional<double> lambda, double psd_tol) {
    if (u.dim() != v.dim())
        throw UsageError("Loewner comparison: dimension mismatch");
    const std::vector<double> ev = hermitian_eigenvalues(v.matrix() - u.matrix());
    return MarginReport::make(ev.front(), scale, relation, lambda, psd_tol);
}

HermitianOperator conjugate(const HermitianOperator& p, const HermitianOperator& x) {
    if (p.dim() != x.dim())
        throw UsageError("conjugation: dimension mismatch");
    return HermitianOperator::from_matrix(matmul(matmul(p.matrix(), x.matrix()), p.matrix()));
}

} // namespace framesplit
