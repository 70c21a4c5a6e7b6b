// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Usage: acceptance <path-to-framesplit-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "framesplit/gen.hpp"
#include "framesplit/inequalities.hpp"
#include "framesplit/rng.hpp"

using namespace framesplit;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "C" << criterion << " " << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty())
        std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++g_failures;
}

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SplitPair frame_split(std::uint64_t seed) {
    CounterRng rng(CounterRng::derive(seed, 0x1));
    const int dim = 2 + static_cast<int>(rng.next_u64() % 7);          // 2..8
    const int count = dim + static_cast<int>(rng.next_u64() %
                                             static_cast<std::uint64_t>(dim + 1));   // d..2d
    const Frame fr = random_frame({dim, count, CounterRng::derive(seed, 0x2)});
    return split_from_subset(fr, random_subset(count, CounterRng::derive(seed, 0x3)));
}

// ---- C1: split properties 1-4 on 500 frame splits + 500 direct splits ----
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_margin = 0.0;
    double worst_dev = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t seed = 11000 + static_cast<std::uint64_t>(trial);
        const SplitPair sp = trial < 500
            ? frame_split(seed)
            : random_split_pair(2 + trial % 7, seed);
        const double scale = sp.scale();
        for (int part = 1; part <= 3; ++part) {
            const double m = check_split_part(sp, part).report->margin;
            worst_margin = std::min(worst_margin, m / scale);
            ok = ok && m >= -1e-9 * scale;
        }
        const double dev = -check_split_part(sp, 4).report->margin;
        worst_dev = std::max(worst_dev, dev / scale);
        ok = ok && dev <= 1e-9 * scale;
    }
    const double secs = elapsed_since(t0);
    ok = ok && secs < 30.0;
    std::ostringstream d;
    d << "1000 splits, worst margin/scale " << worst_margin << ", worst part4 dev/scale "
      << worst_dev << ", " << secs << "s";
    report(1, "split properties 1-4", ok, d.str());
}

// ---- C2: the three lambda families on 1000 random (split, lambda) ----
void criterion2() {
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t seed = 21000 + static_cast<std::uint64_t>(trial);
        CounterRng rng(seed);
        const double lambda = rng.uniform(-2.0, 3.0);
        const SplitPair sp = (trial % 2) == 0
            ? frame_split(seed)
            : random_split_pair(2 + trial % 7, seed);
        const double scale = sp.scale();

        // every certificate must collapse to (a - lambda/2)^2 and pass
        const auto cm = lambda_coefficients(LambdaFamily::mixed_lower, lambda);
        const auto cd = lambda_coefficients(LambdaFamily::defect_upper, lambda);
        const auto cs = lambda_coefficients(LambdaFamily::square_sum_lower, lambda);
        ok = ok && certificate_nonneg(part5_certificate(cm.p, cm.q));
        ok = ok && certificate_nonneg(part6_certificate(cd.p, cd.q));
        ok = ok && certificate_nonneg(part7_certificate(cs.p, cs.q));

        const auto t22 = verify_mixed_bounds(sp, lambda);
        const auto t27 = verify_residual_defect_bounds(sp, lambda);
        const auto t210 = verify_square_sum_bounds(sp, lambda);
        for (const MarginReport* r : {&t22.lower, &t22.middle, &t22.upper, &t27.nonneg,
                                      &t27.upper, &t210.lower, &t210.upper}) {
            worst = std::min(worst, r->margin / scale);
            ok = ok && r->margin >= -1e-9 * scale;
        }
    }
    std::ostringstream d;
    d << "1000 instances, worst margin/scale " << worst;
    report(2, "lambda families", ok, d.str());
}

// ---- C3: equality witnesses on (2I, I, I) at lambda = 1 ----
void criterion3() {
    const auto id = HermitianOperator::identity(2);
    const SplitPair sp(HermitianOperator::from_matrix(ComplexMatrix::diagonal({2.0, 2.0})),
                       id, id);
    const double m22 = verify_mixed_bounds(sp, 1.0).lower.margin;
    const double m27 = verify_residual_defect_bounds(sp, 1.0).upper.margin;
    const double m210 = verify_square_sum_bounds(sp, 1.0).lower.margin;
    const bool ok = std::abs(m22) <= 1e-10 && std::abs(m27) <= 1e-10 && std::abs(m210) <= 1e-10;
    std::ostringstream d;
    d << "|margins| = " << std::abs(m22) << ", " << std::abs(m27) << ", " << std::abs(m210);
    report(3, "equality witnesses at the certificate root", ok, d.str());
}

// ---- C4: classical reductions ----
void criterion4() {
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t seed = 41000 + static_cast<std::uint64_t>(trial);
        CounterRng rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const int count = dim + 1 + static_cast<int>(rng.next_u64() % 4);
        const Frame fr = random_frame({dim, count, CounterRng::derive(seed, 1)});
        const IndexSubset j = random_subset(count, CounterRng::derive(seed, 2));
        const std::vector<cplx> f = random_unit_vector(dim, CounterRng::derive(seed, 3));

        // lambda = 1 energy bounds against the canonical-dual identity
        const auto c25 = verify_energy_bounds(fr, j, f, 1.0);
        const auto gen = verify_general_identity(fr, j, f);
        const double scale = std::max(1.0, c25.breakdown.sum_total);
        const double d1 =
            std::abs((c25.breakdown.sum_jc + c25.breakdown.dual_energy_j) - gen.side2);
        const double d2 =
            std::abs((c25.breakdown.sum_j + c25.breakdown.dual_energy_jc) - gen.side1);
        const double d3 = std::abs(0.75 * c25.breakdown.sum_total - gen.bound_rhs);
        worst = std::max({worst, d1 / scale, d2 / scale, d3 / scale});
        ok = ok && d1 <= 1e-10 * scale && d2 <= 1e-10 * scale && d3 <= 1e-10 * scale;

        // lambda = 1/2 alternate-dual bound carries the 3/4 coefficient
        const DualPair dp = random_alternate_dual(fr, CounterRng::derive(seed, 4), 0.7);
        const auto t213 = verify_dual_bound(dp.frame, dp.dual, j, f, 0.5);
        const double d4 = std::abs(t213.rhs - 0.75 * norm_sq(f));
        worst = std::max(worst, d4);
        ok = ok && d4 <= 1e-8 && t213.bound.passed;
    }
    std::ostringstream d;
    d << "100 instances, worst reduction deviation " << worst;
    report(4, "classical reductions at lambda = 1 and 1/2", ok, d.str());
}

// ---- C5: Parseval identity ----
void criterion5() {
    bool ok = true;
    double worst_eq = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t seed = 51000 + static_cast<std::uint64_t>(trial);
        CounterRng rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 4);
        const int count = dim + static_cast<int>(rng.next_u64() % 5);
        const Frame p = random_parseval({dim, count, CounterRng::derive(seed, 1)});
        const IndexSubset j = random_subset(count, CounterRng::derive(seed, 2));
        const std::vector<cplx> f = random_unit_vector(dim, CounterRng::derive(seed, 3));
        const auto r = verify_parseval_identity(p, j, f);
        const double energy = norm_sq(f);
        worst_eq = std::max(worst_eq, std::abs(r.side1 - r.side2));
        ok = ok && std::abs(r.side1 - r.side2) <= 1e-10;
        ok = ok && std::min(r.side1, r.side2) >= (0.75 - 1e-10) * energy;
    }

    // hand-computed witnesses
    const Frame mb3 = named_frame("mb3");
    const auto w1 = verify_parseval_identity(mb3, IndexSubset(3, {0}),
                                             {cplx{1, 0}, cplx{0, 0}});
    ok = ok && std::abs(w1.side1 - 1.0) <= 1e-12 && std::abs(w1.side2 - 1.0) <= 1e-12;
    const double s = 1.0 / std::sqrt(2.0);
    const auto w2 = verify_parseval_identity(named_frame("onb2"), IndexSubset(2, {0}),
                                             {cplx{s, 0}, cplx{s, 0}});
    ok = ok && std::abs(w2.side1 - 1.0) <= 1e-12 && std::abs(w2.side2 - 1.0) <= 1e-12;
    const auto w3 = verify_parseval_identity(mb3, IndexSubset(3, {0, 1, 2}),
                                             {cplx{0, 0}, cplx{1, 0}});
    ok = ok && std::abs(w3.side1 - 1.0) <= 1e-12 && std::abs(w3.side2 - 1.0) <= 1e-12;

    std::ostringstream d;
    d << "200 instances, worst equality deviation " << worst_eq;
    report(5, "Parseval identity", ok, d.str());
}

// ---- C6: translation-table fidelity ----
void criterion6() {
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t seed = 61000 + static_cast<std::uint64_t>(trial);
        CounterRng rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const int count = dim + static_cast<int>(rng.next_u64() % 5);
        const Frame fr = random_frame({dim, count, CounterRng::derive(seed, 1)});
        const IndexSubset j = random_subset(count, CounterRng::derive(seed, 2));
        const std::vector<cplx> f = random_unit_vector(dim, CounterRng::derive(seed, 3));
        const auto r = verify_energy_bounds(fr, j, f, rng.uniform(-2.0, 3.0));
        const double scale = std::max(1.0, r.breakdown.sum_total);
        worst = std::max(worst, r.scalar_operator_max_dev / scale);
        ok = ok && r.scalar_operator_max_dev <= 1e-8 * scale;
    }
    std::ostringstream d;
    d << "200 instances, worst scalar/operator deviation/scale " << worst;
    report(6, "translation-table fidelity", ok, d.str());
}

// ---- C7: certificate checker vs dense sampling ----
void criterion7() {
    CounterRng rng(0xacce7);
    bool ok = true;
    int disagreements = 0;
    const int grid = 10001;
    for (int trial = 0; trial < 10000; ++trial) {
        const QuadraticCertificate cert{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                        rng.uniform(-3.0, 3.0)};
        double sampled = cert.eval(0.0);
        for (int i = 1; i < grid; ++i)
            sampled = std::min(sampled, cert.eval(static_cast<double>(i) / (grid - 1)));
        if (certificate_nonneg(cert) != (sampled >= -1e-12)) {
            ++disagreements;
            ok = ok && std::abs(sampled) <= 1e-9;
        }
    }
    std::ostringstream d;
    d << "10000 quadratics, " << disagreements << " borderline disagreements";
    report(7, "certificate oracle agreement", ok, d.str());
}

// ---- C8: dual chain ----
void criterion8() {
    bool ok = true;
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t seed = 81000 + static_cast<std::uint64_t>(trial);
        CounterRng rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const double lambda = rng.uniform(-2.0, 3.0);

        const ComplexMatrix u = random_complex_matrix(dim, dim, CounterRng::derive(seed, 1));
        const auto r = identity_pair_lower_bound(u, ComplexMatrix::identity(dim) - u, lambda);
        ok = ok && r.margin >= -1e-9 * r.scale;

        const ComplexMatrix ul = cplx{lambda, 0.0} * ComplexMatrix::identity(dim);
        const auto eq =
            identity_pair_lower_bound(ul, ComplexMatrix::identity(dim) - ul, lambda);
        ok = ok && std::abs(eq.margin) <= 1e-12;
    }
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t seed = 82000 + static_cast<std::uint64_t>(trial);
        CounterRng rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 3);
        const int count = dim + 1 + static_cast<int>(rng.next_u64() % 3);
        const Frame fr = random_frame({dim, count, CounterRng::derive(seed, 1)});
        const DualPair dp =
            random_alternate_dual(fr, CounterRng::derive(seed, 2), rng.uniform(0.0, 1.2));
        const IndexSubset j = random_subset(count, CounterRng::derive(seed, 3));
        const std::vector<cplx> f = random_unit_vector(dim, CounterRng::derive(seed, 4));
        const double lambda = rng.uniform(-2.0, 3.0);

        const auto t213 = verify_dual_bound(dp.frame, dp.dual, j, f, lambda);
        ok = ok && t213.bound.passed;

        std::vector<cplx> weights(static_cast<std::size_t>(count));
        for (auto& w : weights)
            w = cplx{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        ok = ok && verify_weighted_dual_bound(dp.frame, dp.dual, weights, f, lambda).bound.passed;

        std::vector<cplx> indicator(static_cast<std::size_t>(count));
        const IndexSubset jc = j.complement();
        for (int i : jc.members())
            indicator[static_cast<std::size_t>(i)] = 1.0;
        const auto wi = verify_weighted_dual_bound(dp.frame, dp.dual, indicator, f, lambda);
        ok = ok && std::abs(wi.lhs - t213.lhs) <= 1e-12 && std::abs(wi.rhs - t213.rhs) <= 1e-12;
    }
    report(8, "dual chain (identity-pair bound, alternate duals, weights)", ok, "600 instances");
}

// ---- C9: CLI contract ----
int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion9(const std::string& cli) {
    bool ok = true;
    std::ostringstream d;

    const int e1 = run_cli(cli, "verify named:onb2 --subset 0 --lambda 1 --relations t22");
    const int e2 = run_cli(cli, "verify named:mb3 --subset 0 --relations parseval");
    const int e3 = run_cli(cli, "verify random:2,4,42 --subset-seed 1 --lambda 0,1,2");
    const int e4 = run_cli(cli, "sweep named:mb3 --subset 0 --relation parseval");
    ok = ok && e1 == 0 && e2 == 0 && e3 == 0 && e4 == 2;
    d << "exits " << e1 << "," << e2 << "," << e3 << "," << e4;

    const auto t0 = std::chrono::steady_clock::now();
    const std::string out = "/tmp/framesplit_accept_fuzz.json";
    const std::string cmd = cli + " fuzz --trials 1000 --mode frame --seed 7 > " + out + " 2>&1";
    const int status = std::system(cmd.c_str());
    const int fe = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const double secs = elapsed_since(t0);
    ok = ok && fe == 0 && secs < 120.0;

    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const nlohmann::json manifest = nlohmann::json::parse(buf.str());
        ok = ok && manifest.at("outcome_counts").at("failed").get<long>() == 0;
        d << "; fuzz failed=" << manifest["outcome_counts"]["failed"] << " in " << secs << "s";
    } catch (const std::exception&) {
        ok = false;
        d << "; fuzz manifest unparsable";
    }
    std::remove(out.c_str());
    report(9, "CLI contract", ok, d.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-framesplit-cli>\n";
        return 2;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(argv[1]);
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 9 criteria passed" << std::endl;
    return 0;
}
