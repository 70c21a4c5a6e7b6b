#include "framesplit/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "framesplit/errors.hpp"

namespace framesplit {

IndexSubset::IndexSubset(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
    if (universe_ <= 0)
        throw UsageError("subset universe must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= universe_))
        throw UsageError("subset member outside [0, universe)");
}

bool IndexSubset::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSubset IndexSubset::complement() const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(universe_) - members_.size());
    for (int i = 0; i < universe_; ++i)
        if (!contains(i))
            rest.push_back(i);
    return IndexSubset(universe_, std::move(rest));
}

IndexSubset IndexSubset::parse(const std::string& text, int universe) {
    std::vector<int> members;
    std::size_t pos = 0;
    auto parse_int = [&](const std::string& tok) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("subset notation: expected an index, got \"" + tok + "\"");
        }
        if (used != tok.size() || value < 0)
            throw UsageError("subset notation: expected an index, got \"" + tok + "\"");
        return value;
    };
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty())
            throw UsageError("subset notation: empty element");
        const std::size_t dash = tok.find('-');
        if (dash == std::string::npos) {
            members.push_back(parse_int(tok));
        } else {
            const int lo = parse_int(tok.substr(0, dash));
            const int hi = parse_int(tok.substr(dash + 1));
            if (hi < lo)
                throw UsageError("subset notation: descending range \"" + tok + "\"");
            for (int i = lo; i <= hi; ++i)
                members.push_back(i);
        }
        pos = comma + 1;
    }
    return IndexSubset(universe, std::move(members));
}

std::string IndexSubset::to_string() const {
    std::ostringstream os;
    std::size_t i = 0;
    while (i < members_.size()) {
        std::size_t j = i;
        while (j + 1 < members_.size() && members_[j + 1] == members_[j] + 1)
            ++j;
        if (i > 0)
            os << ',';
        if (j == i)
            os << members_[i];
        else if (j == i + 1)
            os << members_[i] << ',' << members_[j];
        else
            os << members_[i] << '-' << members_[j];
        i = j + 1;
    }
    return os.str();
}

SplitPair::SplitPair(HermitianOperator total_in, HermitianOperator part1_in,
                     HermitianOperator part2_in, double psd_tol)
    : total(std::move(total_in)), part1(std::move(part1_in)), part2(std::move(part2_in)) {
    if (part1.dim() != total.dim() || part2.dim() != total.dim())
        throw UsageError("split: dimension mismatch");
    const double s = total.scale();
    const double sum_dev =
        hermitian_spectral_norm(total.matrix() - (part1.matrix() + part2.matrix()));
    if (sum_dev > psd_tol * s) {
        std::ostringstream os;
        os << "parts do not sum to the total: ||S - (S1 + S2)||_2 = " << sum_dev;
        throw ValidationError(os.str());
    }
    if (total.min_eigenvalue() <= 0.0)
        throw ValidationError("split total must be positive definite");
    if (part1.min_eigenvalue() < -psd_tol * s || part2.min_eigenvalue() < -psd_tol * s)
        throw ValidationError("split parts must be positive semidefinite");
}

ResidualPair::ResidualPair(HermitianOperator u_in, HermitianOperator v_in, double psd_tol)
    : u(std::move(u_in)), v(std::move(v_in)) {
    if (u.dim() != v.dim())
        throw UsageError("residual pair: dimension mismatch");
    const double dev = hermitian_spectral_norm(
        u.matrix() + v.matrix() - ComplexMatrix::identity(u.dim()));
    if (dev > psd_tol)
        throw ValidationError("residuals do not sum to the identity");
    const auto in_unit = [psd_tol](const HermitianOperator& h) {
        return h.min_eigenvalue() >= -psd_tol && h.max_eigenvalue() <= 1.0 + psd_tol;
    };
    if (!in_unit(u) || !in_unit(v))
        throw ValidationError("residual spectrum escapes [0, 1]");
}

double QuadraticCertificate::min_on_unit_interval() const {
    double m = std::min(c0, c2 + c1 + c0);       // endpoints a = 0, 1
    if (c2 != 0.0) {
        const double vertex = -c1 / (2.0 * c2);
        if (vertex > 0.0 && vertex < 1.0)
            m = std::min(m, eval(vertex));
    }
    return m;
}

bool certificate_nonneg(const QuadraticCertificate& q) {
    if (!std::isfinite(q.c2) || !std::isfinite(q.c1) || !std::isfinite(q.c0))
        throw UsageError("certificate coefficients must be finite");
    return q.min_on_unit_interval() >= -tol::certificate;
}

QuadraticCertificate part5_certificate(double p, double q) {
    return {1.0, q - p - 1.0, 1.0 - q};
}

QuadraticCertificate part6_certificate(double p, double q) {
    return {1.0, -(1.0 + p), q + p};
}

QuadraticCertificate part7_certificate(double p, double q) {
    return {1.0, (q - p) / 2.0 - 1.0, (1.0 - q) / 2.0};
}

HermitianOperator partial_frame_operator(const Frame& fr, const IndexSubset& j) {
    if (j.universe() != fr.count())
        throw UsageError("subset universe does not match frame count");
    if (j.members().empty())
        return HermitianOperator::zero(fr.dim());
    // Sub-synthesis rows, then the gram product on contiguous rows.
    ComplexMatrix rows(fr.dim(), static_cast<int>(j.members().size()));
    for (int r = 0; r < fr.dim(); ++r) {
        int c = 0;
        for (int i : j.members())
            rows.at(r, c++) = fr.vector(i)[r];
    }
    return HermitianOperator::from_matrix(matmul_abh(rows, rows));
}

SplitPair split_from_subset(const Frame& fr, const IndexSubset& j) {
    return SplitPair(fr.frame_op(), partial_frame_operator(fr, j),
                     partial_frame_operator(fr, j.complement()));
}

ResidualPair residuals(const SplitPair& sp) {
    const HermitianOperator r = inv_sqrt(sp.total);
    return ResidualPair(conjugate(r, sp.part1), conjugate(r, sp.part2));
}

SplitPartResult check_split_part(const SplitPair& sp, int part,
                                 std::optional<double> p, std::optional<double> q,
                                 double psd_tol, bool force) {
    if (part < 1 || part > 7)
        throw UsageError("split property index must be in 1..7");
    const bool parametrized = part >= 5;
    if (parametrized != (p.has_value() && q.has_value()))
        throw UsageError("p and q are required exactly for parts 5-7");

    const double scale = sp.scale();
    const HermitianOperator sinv = inverse(sp.total);
    const HermitianOperator a1 = conjugate(sp.part1, sinv);   // S1 S^{-1} S1
    const HermitianOperator a2 = conjugate(sp.part2, sinv);   // S2 S^{-1} S2
    const HermitianOperator zero = HermitianOperator::zero(sp.total.dim());

    SplitPartResult out{part, true, std::nullopt, std::nullopt};
    switch (part) {
        case 1: {
            const MarginReport m1 = loewner_leq(zero, a1, scale, RelationId::part1,
                                                std::nullopt, psd_tol);
            const MarginReport m2 = loewner_leq(zero, a2, scale, RelationId::part1,
                                                std::nullopt, psd_tol);
            out.report = m1.margin <= m2.margin ? m1 : m2;
            break;
        }
        case 2:
            out.report = loewner_leq(sp.part2 + a1, sp.total, scale, RelationId::part2,
                                     std::nullopt, psd_tol);
            break;
        case 3:
            out.report = loewner_leq(a1 + a2, sp.total, scale, RelationId::part3,
                                     std::nullopt, psd_tol);
            break;
        case 4: {
            const double dev = hermitian_spectral_norm(
                (sp.part2.matrix() + a1.matrix()) - (sp.part1.matrix() + a2.matrix()));
            out.report = MarginReport::make(-dev, scale, RelationId::part4,
                                            std::nullopt, psd_tol);
            break;
        }
        case 5:
        case 6:
        case 7: {
            QuadraticCertificate cert{0.0, 0.0, 0.0};
            RelationId rel = RelationId::part5;
            if (part == 5) {
                cert = part5_certificate(*p, *q);
            } else if (part == 6) {
                cert = part6_certificate(*p, *q);
                rel = RelationId::part6;
            } else {
                cert = part7_certificate(*p, *q);
                rel = RelationId::part7;
            }
            out.certificate = cert;
            if (!certificate_nonneg(cert)) {
                out.applicable = false;
                if (!force)
                    break;
            }
            if (part == 5) {
                out.report = loewner_leq((*p) * sp.part1 + (*q) * sp.part2,
                                         sp.part2 + a1, scale, rel, std::nullopt, psd_tol);
            } else if (part == 6) {
                out.report = loewner_leq(sp.part1 - a1,
                                         (*p) * sp.part2 + (*q) * sp.total, scale, rel,
                                         std::nullopt, psd_tol);
            } else {
                out.report = loewner_leq((*p) * sp.part1 + (*q) * sp.part2, a1 + a2,
                                         scale, rel, std::nullopt, psd_tol);
            }
            break;
        }
        default:
            break;
    }
    return out;
}

} // namespace framesplit
