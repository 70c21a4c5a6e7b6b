// framesplit: verify | fuzz | sweep | show
//
// Exit codes: 0 = every check passed (or was inapplicable), 1 = at least
// one genuine violation, 2 = usage or input error.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "framesplit/errors.hpp"
#include "framesplit/gen.hpp"
#include "framesplit/inequalities.hpp"
#include "framesplit/rng.hpp"

using namespace framesplit;

namespace {

// Shortest round-trip decimal representation.
std::string short_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double psd_tol_from_env() {
    const char* env = std::getenv("FRAMESPLIT_TOL");
    if (env == nullptr)
        return tol::psd;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0)
        throw UsageError(std::string("FRAMESPLIT_TOL is not a positive number: ") + env);
    return v;
}

Frame load_frame(const std::string& source) {
    if (source.rfind("named:", 0) == 0)
        return named_frame(source.substr(6));
    if (source.rfind("random:", 0) == 0) {
        const std::string spec = source.substr(7);
        int d = 0;
        int m = 0;
        unsigned long long seed = 0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream is(spec);
        if (!(is >> d >> c1 >> m >> c2 >> seed) || c1 != ',' || c2 != ',' || !is.eof())
            throw UsageError("random frame source must be random:<dim>,<count>,<seed>");
        return random_frame({d, m, seed});
    }
    std::ifstream in(source);
    if (!in)
        throw UsageError("cannot open frame file: " + source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return frame_from_json_text(buffer.str());
}

struct Tally {
    long passed = 0;
    long failed = 0;
    long inapplicable = 0;
    double worst_margin = std::numeric_limits<double>::infinity();

    void add_report(const MarginReport& r) {
        (r.passed ? passed : failed) += 1;
        worst_margin = std::min(worst_margin, r.margin / r.scale);
    }
    void add_flag(bool ok) { (ok ? passed : failed) += 1; }
    void add_inapplicable() { inapplicable += 1; }
    long total() const { return passed + failed + inapplicable; }
};

const std::set<std::string> kVerifyRelations = {
    "part1", "part2", "part3", "part4", "part5", "part6", "part7",
    "t22", "t27", "t210", "c25", "parseval", "general", "t213", "l212", "weighted",
};

std::vector<cplx> random_weights(int count, std::uint64_t seed) {
    CounterRng rng(CounterRng::derive(seed, 0x3e16u));
    std::vector<cplx> w(static_cast<std::size_t>(count));
    for (auto& z : w)
        z = cplx{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    return w;
}

// U f = sum_{i in J^c} <f, g_i> f_i as a matrix: F D_{J^c} G^H.
ComplexMatrix dual_pair_operator(const Frame& fr, const Frame& dual, const IndexSubset& jc) {
    ComplexMatrix masked = synthesis_matrix(fr);
    for (int c = 0; c < masked.cols(); ++c)
        if (!jc.contains(c))
            for (int r = 0; r < masked.rows(); ++r)
                masked.at(r, c) = 0.0;
    return matmul_abh(masked, synthesis_matrix(dual));
}

struct VerifyOptions {
    std::string source;
    std::string subset_text;
    bool subset_given = false;
    std::uint64_t subset_seed = 0;
    std::uint64_t vector_seed = 0;
    std::uint64_t dual_seed = 0;
    bool dual_seed_given = false;
    double dual_perturbation = 0.5;
    std::uint64_t weights_seed = 0;
    std::vector<double> lambdas;
    std::vector<std::string> relations;
    std::optional<double> p;
    std::optional<double> q;
    bool force_certificates = false;
};

int run_verify(const VerifyOptions& opt) {
    const double psd_tol = psd_tol_from_env();
    const Frame fr = load_frame(opt.source);
    const IndexSubset j = opt.subset_given
        ? IndexSubset::parse(opt.subset_text, fr.count())
        : random_subset(fr.count(), opt.subset_seed);
    const std::vector<cplx> f = random_unit_vector(fr.dim(), opt.vector_seed);
    const std::vector<double> lambdas = opt.lambdas.empty()
        ? std::vector<double>{1.0} : opt.lambdas;

    std::set<std::string> selected(opt.relations.begin(), opt.relations.end());
    for (const std::string& r : selected)
        if (kVerifyRelations.count(r) == 0)
            throw UsageError("unknown relation \"" + r + "\"");
    const bool defaulted = selected.empty();
    if (defaulted) {
        selected = {"part1", "part2", "part3", "part4",
                    "t22", "t27", "t210", "c25", "general", "t213", "l212"};
        if (frame_bounds(fr).is_parseval())
            selected.insert("parseval");
    }
    for (const char* r : {"part5", "part6", "part7"})
        if (selected.count(r) != 0 && (!opt.p || !opt.q))
            throw UsageError(std::string(r) + " needs explicit --p and --q");

    const ReportInputs inputs{fr.label(), j.to_string(), opt.vector_seed};
    Tally tally;
    auto emit = [&](const MarginReport& r, const std::string& outcome = "") {
        std::cout << report_to_json_line(r, inputs, outcome) << "\n";
        if (outcome != "inapplicable")
            tally.add_report(r);
        else
            tally.add_inapplicable();
    };

    const bool needs_split =
        selected.count("t22") || selected.count("t27") || selected.count("t210") ||
        selected.count("part1") || selected.count("part2") || selected.count("part3") ||
        selected.count("part4") || selected.count("part5") || selected.count("part6") ||
        selected.count("part7");
    std::optional<SplitPair> sp;
    if (needs_split)
        sp.emplace(split_from_subset(fr, j));

    const bool needs_dual =
        selected.count("t213") || selected.count("weighted") || selected.count("l212");
    std::optional<DualPair> dp;
    if (needs_dual) {
        dp.emplace(opt.dual_seed_given
                       ? random_alternate_dual(fr, opt.dual_seed, opt.dual_perturbation)
                       : canonical_dual(fr));
    }

    // lambda-free relations run once
    for (int part = 1; part <= 7; ++part) {
        const std::string key = "part" + std::to_string(part);
        if (selected.count(key) == 0)
            continue;
        const auto res = check_split_part(*sp, part, opt.p, opt.q, psd_tol,
                                          opt.force_certificates);
        if (!res.applicable && !res.report.has_value()) {
            MarginReport placeholder{0.0, 1.0, true,
                                     static_cast<RelationId>(static_cast<int>(RelationId::part1) + part - 1),
                                     std::nullopt};
            emit(placeholder, "inapplicable");
        } else {
            emit(*res.report, res.applicable ? "" : "forced");
        }
    }
    if (selected.count("parseval")) {
        const auto r = verify_parseval_identity(fr, j, f, psd_tol);
        emit(r.equality);
        emit(r.bound);
    }
    if (selected.count("general")) {
        const auto r = verify_general_identity(fr, j, f, psd_tol);
        emit(r.equality);
        emit(r.bound);
    }

    for (double lambda : lambdas) {
        if (selected.count("t22")) {
            const auto r = verify_mixed_bounds(*sp, lambda, psd_tol);
            emit(r.lower);
            emit(r.middle);
            emit(r.upper);
        }
        if (selected.count("t27")) {
            const auto r = verify_residual_defect_bounds(*sp, lambda, psd_tol);
            emit(r.nonneg);
            emit(r.upper);
        }
        if (selected.count("t210")) {
            const auto r = verify_square_sum_bounds(*sp, lambda, psd_tol);
            emit(r.lower);
            emit(r.upper);
        }
        if (selected.count("c25")) {
            const auto r = verify_energy_bounds(fr, j, f, lambda, psd_tol);
            emit(r.lower);
            emit(r.middle);
            emit(r.upper);
        }
        if (selected.count("t213"))
            emit(verify_dual_bound(dp->frame, dp->dual, j, f, lambda, psd_tol).bound);
        if (selected.count("weighted")) {
            const auto w = random_weights(fr.count(), opt.weights_seed);
            emit(verify_weighted_dual_bound(dp->frame, dp->dual, w, f, lambda, psd_tol).bound);
        }
        if (selected.count("l212")) {
            const ComplexMatrix u = dual_pair_operator(dp->frame, dp->dual, j.complement());
            const ComplexMatrix v = ComplexMatrix::identity(fr.dim()) - u;
            emit(identity_pair_lower_bound(u, v, lambda, psd_tol));
        }
    }
    return tally.failed > 0 ? 1 : 0;
}

struct FuzzOptions {
    long trials = 100;
    std::string mode = "frame";
    std::uint64_t seed = 0;
    std::vector<int> dim_range = {2, 6};
    std::vector<double> count_mult_range = {1.0, 2.0};
    std::vector<double> lambda_range = {-2.0, 3.0};
};

int run_fuzz(const FuzzOptions& opt) {
    const double psd_tol = psd_tol_from_env();
    if (opt.trials < 1)
        throw UsageError("fuzz needs at least one trial");
    if (opt.mode != "frame" && opt.mode != "operator" && opt.mode != "dual")
        throw UsageError("fuzz mode must be frame, operator or dual");
    if (opt.dim_range.size() != 2 || opt.dim_range[0] < 2 ||
        opt.dim_range[1] < opt.dim_range[0] || opt.dim_range[1] > 64)
        throw UsageError("dim range must be lo,hi with 2 <= lo <= hi <= 64");
    if (opt.count_mult_range.size() != 2 || opt.count_mult_range[0] < 1.0 ||
        opt.count_mult_range[1] < opt.count_mult_range[0])
        throw UsageError("count multiplier range must be lo,hi with lo >= 1");
    if (opt.lambda_range.size() != 2 || opt.lambda_range[0] >= opt.lambda_range[1])
        throw UsageError("lambda range must be lo,hi with lo < hi");

    const auto start = std::chrono::steady_clock::now();
    Tally tally;

    for (long trial = 0; trial < opt.trials; ++trial) {
        const std::uint64_t ts = CounterRng::derive(opt.seed, static_cast<std::uint64_t>(trial));
        CounterRng rng(ts);
        const int dim = opt.dim_range[0] +
            static_cast<int>(rng.next_u64() %
                             static_cast<std::uint64_t>(opt.dim_range[1] - opt.dim_range[0] + 1));
        const double lambda = rng.uniform(opt.lambda_range[0], opt.lambda_range[1]);

        if (opt.mode == "frame" || opt.mode == "dual") {
            const double mult = rng.uniform(opt.count_mult_range[0], opt.count_mult_range[1]);
            const int count = std::max(dim, static_cast<int>(std::lround(dim * mult)));
            const Frame fr = random_frame({dim, count, CounterRng::derive(ts, 1)});
            const IndexSubset j = random_subset(count, CounterRng::derive(ts, 2));
            const std::vector<cplx> f = random_unit_vector(dim, CounterRng::derive(ts, 3));

            if (opt.mode == "frame") {
                const SplitPair sp = split_from_subset(fr, j);
                for (int part = 1; part <= 4; ++part)
                    tally.add_report(*check_split_part(sp, part, std::nullopt, std::nullopt,
                                                       psd_tol).report);
                const auto t22 = verify_mixed_bounds(sp, lambda, psd_tol);
                tally.add_report(t22.lower);
                tally.add_report(t22.middle);
                tally.add_report(t22.upper);
                const auto t27 = verify_residual_defect_bounds(sp, lambda, psd_tol);
                tally.add_report(t27.nonneg);
                tally.add_report(t27.upper);
                const auto t210 = verify_square_sum_bounds(sp, lambda, psd_tol);
                tally.add_report(t210.lower);
                tally.add_report(t210.upper);
                const auto c25 = verify_energy_bounds(fr, j, f, lambda, psd_tol);
                tally.add_report(c25.lower);
                tally.add_report(c25.middle);
                tally.add_report(c25.upper);
                tally.add_flag(c25.scalar_operator_max_dev <=
                               1e-8 * std::max(1.0, c25.breakdown.sum_total));
                const auto gen = verify_general_identity(fr, j, f, psd_tol);
                tally.add_report(gen.equality);
                tally.add_report(gen.bound);
                const auto par = verify_parseval_identity(to_parseval(fr), j, f, psd_tol);
                tally.add_report(par.equality);
                tally.add_report(par.bound);
            } else {
                const DualPair dp =
                    random_alternate_dual(fr, CounterRng::derive(ts, 4), rng.uniform(0.0, 1.5));
                const auto t213 = verify_dual_bound(dp.frame, dp.dual, j, f, lambda, psd_tol);
                tally.add_report(t213.bound);

                const auto w = random_weights(count, CounterRng::derive(ts, 5));
                tally.add_report(
                    verify_weighted_dual_bound(dp.frame, dp.dual, w, f, lambda, psd_tol).bound);

                // indicator weights must reproduce the subset bound exactly
                std::vector<cplx> indicator(static_cast<std::size_t>(count));
                const IndexSubset jc = j.complement();
                for (int i : jc.members())
                    indicator[static_cast<std::size_t>(i)] = 1.0;
                const auto wi =
                    verify_weighted_dual_bound(dp.frame, dp.dual, indicator, f, lambda, psd_tol);
                tally.add_flag(std::abs(wi.lhs - t213.lhs) <= 1e-12 &&
                               std::abs(wi.rhs - t213.rhs) <= 1e-12);

                const ComplexMatrix u = dual_pair_operator(dp.frame, dp.dual, j.complement());
                tally.add_report(identity_pair_lower_bound(
                    u, ComplexMatrix::identity(dim) - u, lambda, psd_tol));
                const ComplexMatrix ur =
                    random_complex_matrix(dim, dim, CounterRng::derive(ts, 6));
                tally.add_report(identity_pair_lower_bound(
                    ur, ComplexMatrix::identity(dim) - ur, lambda, psd_tol));
            }
        } else {
            const SplitPair sp = random_split_pair(dim, CounterRng::derive(ts, 7));
            for (int part = 1; part <= 4; ++part)
                tally.add_report(*check_split_part(sp, part, std::nullopt, std::nullopt,
                                                   psd_tol).report);
            const auto t22 = verify_mixed_bounds(sp, lambda, psd_tol);
            tally.add_report(t22.lower);
            tally.add_report(t22.middle);
            tally.add_report(t22.upper);
            const auto t27 = verify_residual_defect_bounds(sp, lambda, psd_tol);
            tally.add_report(t27.nonneg);
            tally.add_report(t27.upper);
            const auto t210 = verify_square_sum_bounds(sp, lambda, psd_tol);
            tally.add_report(t210.lower);
            tally.add_report(t210.upper);
            // random (p, q): outside the certificate region the parts assert
            // nothing and count as inapplicable
            const double p = rng.uniform(-3.0, 3.0);
            const double q = rng.uniform(-3.0, 3.0);
            for (int part = 5; part <= 7; ++part) {
                const auto res = check_split_part(sp, part, p, q, psd_tol);
                if (res.applicable)
                    tally.add_report(*res.report);
                else
                    tally.add_inapplicable();
            }
        }
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::ordered_json manifest{
        {"command", "fuzz"},
        {"parameters",
         {{"trials", opt.trials},
          {"mode", opt.mode},
          {"seed", opt.seed},
          {"dim_range", opt.dim_range},
          {"count_mult_range", opt.count_mult_range},
          {"lambda_range", opt.lambda_range}}},
        {"outcome_counts",
         {{"passed", tally.passed}, {"failed", tally.failed},
          {"inapplicable", tally.inapplicable}}},
        {"worst_margin", tally.worst_margin},
        {"elapsed", elapsed},
    };
    std::cout << manifest.dump() << "\n";
    return tally.failed > 0 ? 1 : 0;
}

struct SweepOptions {
    std::string source;
    std::string subset_text;
    bool subset_given = false;
    std::uint64_t subset_seed = 0;
    std::uint64_t vector_seed = 0;
    std::string relation;
    double lambda_min = 0.0;
    double lambda_max = 2.0;
    long steps = 101;
};

int run_sweep(const SweepOptions& opt) {
    const double psd_tol = psd_tol_from_env();
    static const std::set<std::string> kSweepable = {
        "t22_lower", "t22_upper", "t27_upper", "t210_lower", "t210_upper",
        "c25_lower", "t213", "l212",
    };
    if (kSweepable.count(opt.relation) == 0)
        throw UsageError("relation \"" + opt.relation +
                         "\" cannot be swept over lambda (sweepable: t22_lower, t22_upper, "
                         "t27_upper, t210_lower, t210_upper, c25_lower, t213, l212)");
    if (opt.steps < 2)
        throw UsageError("sweep needs at least 2 steps");
    if (!(opt.lambda_min < opt.lambda_max))
        throw UsageError("sweep needs lambda_min < lambda_max");

    const Frame fr = load_frame(opt.source);
    const IndexSubset j = opt.subset_given
        ? IndexSubset::parse(opt.subset_text, fr.count())
        : random_subset(fr.count(), opt.subset_seed);
    const std::vector<cplx> f = random_unit_vector(fr.dim(), opt.vector_seed);

    std::optional<SplitPair> sp;
    std::optional<DualPair> dp;
    std::optional<ComplexMatrix> u;
    if (opt.relation.rfind("t22", 0) == 0 || opt.relation.rfind("t27", 0) == 0 ||
        opt.relation.rfind("t210", 0) == 0)
        sp.emplace(split_from_subset(fr, j));
    if (opt.relation == "t213")
        dp.emplace(canonical_dual(fr));
    if (opt.relation == "l212") {
        dp.emplace(canonical_dual(fr));
        u.emplace(dual_pair_operator(dp->frame, dp->dual, j.complement()));
    }

    std::cout << "lambda,margin,passed\n";
    for (long step = 0; step < opt.steps; ++step) {
        const double lambda = opt.lambda_min +
            (opt.lambda_max - opt.lambda_min) * static_cast<double>(step) /
                static_cast<double>(opt.steps - 1);
        MarginReport r{0.0, 1.0, true, RelationId::loewner, lambda};
        if (opt.relation == "t22_lower")
            r = verify_mixed_bounds(*sp, lambda, psd_tol).lower;
        else if (opt.relation == "t22_upper")
            r = verify_mixed_bounds(*sp, lambda, psd_tol).upper;
        else if (opt.relation == "t27_upper")
            r = verify_residual_defect_bounds(*sp, lambda, psd_tol).upper;
        else if (opt.relation == "t210_lower")
            r = verify_square_sum_bounds(*sp, lambda, psd_tol).lower;
        else if (opt.relation == "t210_upper")
            r = verify_square_sum_bounds(*sp, lambda, psd_tol).upper;
        else if (opt.relation == "c25_lower")
            r = verify_energy_bounds(fr, j, f, lambda, psd_tol).lower;
        else if (opt.relation == "t213")
            r = verify_dual_bound(dp->frame, dp->dual, j, f, lambda, psd_tol).bound;
        else
            r = identity_pair_lower_bound(*u, ComplexMatrix::identity(fr.dim()) - *u,
                                          lambda, psd_tol);
        std::cout << short_double(lambda) << ',' << short_double(r.margin) << ','
                  << (r.passed ? "true" : "false") << "\n";
    }
    return 0;
}

int run_show(const std::string& source, const std::string& out_path) {
    const Frame fr = load_frame(source);
    const FrameBounds b = frame_bounds(fr);
    const double parseval_dev =
        std::max(std::abs(b.lower - 1.0), std::abs(b.upper - 1.0));

    std::cout << "label:              " << (fr.label().empty() ? "(none)" : fr.label()) << "\n";
    std::cout << "dim:                " << fr.dim() << "\n";
    std::cout << "count:              " << fr.count() << "\n";
    std::cout << "frame bounds:       (" << short_double(b.lower) << ", "
              << short_double(b.upper) << ")\n";
    std::cout << "parseval deviation: " << short_double(parseval_dev) << "\n";

    const DualPair dp = canonical_dual(fr);
    const int preview = std::min(4, fr.count());
    std::cout << "canonical dual (first " << preview << " of " << fr.count() << "):\n";
    for (int i = 0; i < preview; ++i) {
        std::cout << "  g" << i << " = [";
        for (int k = 0; k < fr.dim(); ++k) {
            const cplx z = dp.dual.vector(i)[k];
            if (k > 0)
                std::cout << ", ";
            std::cout << short_double(z.real());
            if (z.imag() != 0.0)
                std::cout << (z.imag() > 0 ? "+" : "") << short_double(z.imag()) << "i";
        }
        std::cout << "]\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw UsageError("cannot write frame file: " + out_path);
        out << frame_to_json_text(fr) << "\n";
        std::cout << "written:            " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-frame splitting inequality verifier"};
    app.require_subcommand(1);

    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check the relation suite on one frame, emitting one JSON report per line");
    verify->add_option("source", vo.source,
                       "frame source: <file.json> | named:<name> | random:<d>,<m>,<seed>")
        ->required();
    auto* vsub = verify->add_option("--subset", vo.subset_text,
                                    "index subset, e.g. 0,2-4 (default: drawn from --subset-seed)");
    verify->add_option("--subset-seed", vo.subset_seed, "seed for a random subset");
    verify->add_option("--vector-seed", vo.vector_seed, "seed for the probe vector f");
    verify->add_option("--lambda", vo.lambdas, "lambda values")->delimiter(',');
    verify->add_option("--relations", vo.relations,
                       "relations to run (default: full applicable suite)")
        ->delimiter(',');
    auto* vdual = verify->add_option("--dual-seed", vo.dual_seed,
                                     "use a random alternate dual drawn from this seed");
    verify->add_option("--dual-perturbation", vo.dual_perturbation,
                       "perturbation of the alternate dual");
    verify->add_option("--weights-seed", vo.weights_seed, "seed for the weighted relation");
    verify->add_option("--p", vo.p, "explicit p for part5/part6/part7");
    verify->add_option("--q", vo.q, "explicit q for part5/part6/part7");
    verify->add_flag("--force-certificates", vo.force_certificates,
                     "evaluate parts 5-7 even when the certificate fails");

    FuzzOptions fo;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Random instances of the full relation suite");
    fuzz->add_option("--trials", fo.trials, "number of independent trials")->required();
    fuzz->add_option("--mode", fo.mode, "frame | operator | dual");
    fuzz->add_option("--seed", fo.seed, "master seed");
    fuzz->add_option("--dim-range", fo.dim_range, "dimension range lo,hi")->delimiter(',');
    fuzz->add_option("--count-mult-range", fo.count_mult_range,
                     "count multiplier range lo,hi")->delimiter(',');
    fuzz->add_option("--lambda-range", fo.lambda_range, "lambda range lo,hi")->delimiter(',');

    SweepOptions so;
    CLI::App* sweep = app.add_subcommand("sweep", "CSV margin sweep over lambda");
    sweep->add_option("source", so.source, "frame source")->required();
    auto* ssub = sweep->add_option("--subset", so.subset_text, "index subset");
    sweep->add_option("--subset-seed", so.subset_seed, "seed for a random subset");
    sweep->add_option("--vector-seed", so.vector_seed, "seed for the probe vector f");
    sweep->add_option("--relation", so.relation, "relation to sweep")->required();
    sweep->add_option("--lambda-min", so.lambda_min, "sweep start");
    sweep->add_option("--lambda-max", so.lambda_max, "sweep end");
    sweep->add_option("--steps", so.steps, "number of grid points (>= 2)");

    std::string show_source;
    std::string show_out;
    CLI::App* show = app.add_subcommand("show", "Inspect a frame");
    show->add_option("source", show_source, "frame source")->required();
    show->add_option("--out", show_out, "write the frame as JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        vo.subset_given = vsub->count() > 0;
        vo.dual_seed_given = vdual->count() > 0;
        so.subset_given = ssub->count() > 0;
        if (verify->parsed())
            return run_verify(vo);
        if (fuzz->parsed())
            return run_fuzz(fo);
        if (sweep->parsed())
            return run_sweep(so);
        return run_show(show_source, show_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
