#ifndef FRAMESPLIT_SPLITTING_HPP
#define FRAMESPLIT_SPLITTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "framesplit/frame.hpp"
#include "framesplit/hermitian.hpp"

namespace framesplit {

// A subset J of the index set {0, ..., m-1}.
class IndexSubset {
public:
    IndexSubset(int universe, std::vector<int> members);

    int universe() const { return universe_; }
    const std::vector<int>& members() const { return members_; }
    bool contains(int i) const;
    IndexSubset complement() const;

    // CLI notation: comma-separated indices or ranges, e.g. "0,2-4".
    // "" is the empty subset.
    static IndexSubset parse(const std::string& text, int universe);
    std::string to_string() const;

private:
    int universe_;
    std::vector<int> members_;   // sorted, unique
};

// A validated decomposition S = S1 + S2 with S positive definite and both
// parts positive semidefinite (within the psd tolerance).
struct SplitPair {
    HermitianOperator total;
    HermitianOperator part1;
    HermitianOperator part2;

    SplitPair(HermitianOperator total, HermitianOperator part1, HermitianOperator part2,
              double psd_tol = tol::psd);

    double scale() const { return total.scale(); }
};

// U = S^{-1/2} S1 S^{-1/2}, V = S^{-1/2} S2 S^{-1/2}: commuting positive
// contractions with U + V = I.
struct ResidualPair {
    HermitianOperator u;
    HermitianOperator v;

    ResidualPair(HermitianOperator u, HermitianOperator v, double psd_tol = tol::psd);
};

// a(x) = c2 x^2 + c1 x + c0. Nonnegativity on [0,1] of one of these is the
// scalar certificate behind each operator inequality of parts 5-7.
struct QuadraticCertificate {
    double c2;
    double c1;
    double c0;

    double eval(double x) const { return (c2 * x + c1) * x + c0; }
    // Exact minimum over [0,1]: endpoints plus the interior vertex.
    double min_on_unit_interval() const;
};

// true iff min over [0,1] of the quadratic >= -1e-12.
bool certificate_nonneg(const QuadraticCertificate& q);

// Certificates for the three parametrized split properties (parts 5-7).
QuadraticCertificate part5_certificate(double p, double q);   // rho
QuadraticCertificate part6_certificate(double p, double q);   // eta
QuadraticCertificate part7_certificate(double p, double q);   // tau

// S_J = sum_{i in J} f_i f_i^H; positive semidefinite.
HermitianOperator partial_frame_operator(const Frame& fr, const IndexSubset& j);

// (S, S_J, S_{J^c}).
SplitPair split_from_subset(const Frame& fr, const IndexSubset& j);

ResidualPair residuals(const SplitPair& sp);

// Result of checking one of the seven split properties. For parts 5-7 a
// failing certificate makes the property inapplicable: no margin is
// computed unless forced.
struct SplitPartResult {
    int part;
    bool applicable;
    std::optional<QuadraticCertificate> certificate;   // parts 5-7 only
    std::optional<MarginReport> report;
};

// part 1: 0 <= S_i S^{-1} S_i for i in {1,2} (min of both margins)
// part 2: S2 + S1 S^{-1} S1 <= S
// part 3: S1 S^{-1} S1 + S2 S^{-1} S2 <= S
// part 4: S2 + S1 S^{-1} S1 = S1 + S2 S^{-1} S2 (margin = -deviation norm)
// part 5: p S1 + q S2 <= S2 + S1 S^{-1} S1          [certificate rho]
// part 6: S1 - S1 S^{-1} S1 <= p S2 + q S           [certificate eta]
// part 7: p S1 + q S2 <= S1 S^{-1} S1 + S2 S^{-1} S2 [certificate tau]
// p, q must be supplied exactly for parts 5-7 (UsageError otherwise).
SplitPartResult check_split_part(const SplitPair& sp, int part,
                                 std::optional<double> p = std::nullopt,
                                 std::optional<double> q = std::nullopt,
                                 double psd_tol = tol::psd,
                                 bool force = false);

} // namespace framesplit

#endif
