// Command-line front end: eval, verify, verify-all, sieve, coeffs, constants.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 domain/resource error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "auric/auric.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Stream selected by --out; keeps the ofstream alive while in use.
struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw auric::ResourceError("cannot open output file '" + path + "'");
        stream = &file;
    }
};

struct EvalArgs {
    std::string weight = "totient";
    std::string x = "golden-inverse";
    std::size_t digits = 50;
    std::size_t guard = auric::Context::kDefaultGuardDigits;
    std::string form = "sum";
};

int run_eval(const EvalArgs& args) {
    const auric::Weight weight = auric::weight_from_name(args.weight);
    const auric::EvalPoint point = auric::EvalPoint::parse(args.x);
    const auric::Context ctx(args.digits, args.guard);
    const auric::Decimal x = point.materialize(ctx);

    auric::SeriesSpec spec{weight, x, args.digits, args.guard,
                           point.materialization_error_ulps()};
    std::size_t limit = args.form == "product"
                            ? auric::truncation_index(
                                  x.rescaled(ctx.working_digits() + auric::product_extra_digits(x)),
                                  args.digits + auric::product_extra_digits(x), args.guard)
                            : auric::truncation_index(x, args.digits, args.guard);
    if (limit < 16) limit = 16;
    const auric::ArithFnTable table = auric::sieve_build(static_cast<std::uint32_t>(limit));

    const auric::EvalResult result = args.form == "product"
                                         ? auric::eval_product_form(spec, table)
                                         : auric::eval_weighted_log_series(spec, table);

    std::cout << result.value.rescaled(args.digits).str() << "\n";
    const nlohmann::json sidecar{
        {"schema", 1},
        {"weight", args.weight},
        {"x", point.text()},
        {"digits", args.digits},
        {"form", args.form},
        {"terms_used", result.terms_used},
        {"tail_bound", result.tail_bound.str()},
        {"rounding_budget", result.rounding_budget.str()},
    };
    std::cout << sidecar.dump() << "\n";
    return kExitPass;
}

struct VerifyArgs {
    std::string identity;
    std::size_t digits = 50;
    std::size_t guard = auric::Context::kDefaultGuardDigits;
    std::string x;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    const auric::IdentityId id = auric::identity_from_name(args.identity);
    if (!args.x.empty() && !auric::identity_takes_point(id)) {
        std::cerr << "error: --x is only valid for lemma2_* and general_product_* identities\n";
        return kExitUsage;
    }
    auric::VerifyOptions opts;
    opts.digits = args.digits;
    opts.guard = args.guard;
    if (!args.x.empty()) opts.point = auric::EvalPoint::parse(args.x);

    const auric::VerificationReport report = auric::verify(id, opts);
    if (args.json)
        std::cout << auric::report_to_json(report).dump() << "\n";
    else
        std::cout << auric::report_to_text(report);
    return report.pass ? kExitPass : kExitVerifyFail;
}

int run_verify_all(std::size_t digits, std::size_t guard, bool json) {
    const std::vector<auric::VerificationReport> reports = auric::verify_all(digits, guard);
    if (json)
        std::cout << auric::reports_to_json(reports).dump() << "\n";
    else
        std::cout << auric::reports_to_text(reports);
    return auric::all_pass(reports) ? kExitPass : kExitVerifyFail;
}

int run_sieve(std::uint32_t limit, const std::string& out_path) {
    const auric::ArithFnTable table = auric::sieve_build(limit);
    OutputTarget out;
    out.open(out_path);
    for (std::uint32_t n = 1; n <= limit; ++n)
        *out.stream << n << "\t" << table.totient(n) << "\t"
                    << static_cast<int>(table.moebius(n)) << "\n";
    out.stream->flush();
    return kExitPass;
}

int run_coeffs(const std::string& weight_name, std::size_t degree, const std::string& out_path) {
    const auric::Weight weight = auric::weight_from_name(weight_name);
    const auric::ArithFnTable table = auric::sieve_build(static_cast<std::uint32_t>(degree));
    const auric::TruncatedRationalSeries expanded =
        auric::expand_double_sum(weight, degree, table);
    const auric::TruncatedRationalSeries expected =
        auric::expected_coefficients(weight, degree, table);

    OutputTarget out;
    out.open(out_path);
    for (std::size_t n = 1; n <= degree; ++n) {
        const auric::Rational& c = expanded.coeff(n);
        *out.stream << n << "\t" << numerator(c).str() << "/" << denominator(c).str() << "\n";
    }
    out.stream->flush();

    const std::vector<std::size_t> mismatches = auric::compare_series(expanded, expected);
    if (!mismatches.empty()) {
        std::cerr << "coefficient mismatch at " << mismatches.size() << " position(s), first at n="
                  << mismatches.front() << "\n";
        return kExitVerifyFail;
    }
    return kExitPass;
}

int run_constants(const std::string& name, std::size_t digits, std::size_t guard) {
    const auric::Constant which = auric::constant_from_name(name);
    const auric::Context ctx(digits, guard);
    std::cout << auric::constant(which, ctx).rescaled(digits).str() << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted logarithmic series and product identities of the golden ratio"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a weighted series or product form");
    eval->add_option("--weight", eval_args.weight)->check(CLI::IsMember({"totient", "moebius"}));
    eval->add_option("--x", eval_args.x, "Point: decimal, p/q, or golden-inverse");
    eval->add_option("--digits", eval_args.digits)->check(CLI::PositiveNumber);
    eval->add_option("--guard", eval_args.guard);
    eval->add_option("--form", eval_args.form)->check(CLI::IsMember({"sum", "product"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Verify one identity");
    verify->add_option("--identity", verify_args.identity)->required();
    verify->add_option("--digits", verify_args.digits)->check(CLI::PositiveNumber);
    verify->add_option("--guard", verify_args.guard);
    verify->add_option("--x", verify_args.x, "Point for lemma2_*/general_product_*");
    bool verify_text = false;
    verify->add_flag("--json", verify_args.json);
    verify->add_flag("--text", verify_text)->excludes("--json");

    std::size_t all_digits = 50;
    std::size_t all_guard = auric::Context::kDefaultGuardDigits;
    bool all_json = false;
    bool all_text = false;
    CLI::App* verify_all = app.add_subcommand("verify-all", "Verify the full identity suite");
    verify_all->add_option("--digits", all_digits)->check(CLI::PositiveNumber);
    verify_all->add_option("--guard", all_guard);
    verify_all->add_flag("--json", all_json);
    verify_all->add_flag("--text", all_text)->excludes("--json");

    std::uint32_t sieve_limit = 100;
    std::string sieve_out;
    CLI::App* sieve = app.add_subcommand("sieve", "Dump totient/moebius tables");
    sieve->add_option("--limit", sieve_limit)->check(CLI::PositiveNumber);
    sieve->add_option("--out", sieve_out);

    std::string coeffs_weight = "totient";
    std::size_t coeffs_degree = 200;
    std::string coeffs_out;
    CLI::App* coeffs = app.add_subcommand("coeffs", "Exact series coefficients with cross-check");
    coeffs->add_option("--weight", coeffs_weight)->check(CLI::IsMember({"totient", "moebius"}));
    coeffs->add_option("--degree", coeffs_degree)->check(CLI::PositiveNumber);
    coeffs->add_option("--out", coeffs_out);

    std::string const_name = "golden";
    std::size_t const_digits = 50;
    std::size_t const_guard = auric::Context::kDefaultGuardDigits;
    CLI::App* constants = app.add_subcommand("constants", "Print a named constant");
    constants->add_option("--name", const_name)
        ->check(CLI::IsMember({"sqrt5", "golden", "golden_inverse", "golden-inverse", "e"}));
    constants->add_option("--digits", const_digits)->check(CLI::PositiveNumber);
    constants->add_option("--guard", const_guard);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return run_eval(eval_args);
        if (*verify) return run_verify(verify_args);
        if (*verify_all) return run_verify_all(all_digits, all_guard, all_json);
        if (*sieve) return run_sieve(sieve_limit, sieve_out);
        if (*coeffs) return run_coeffs(coeffs_weight, coeffs_degree, coeffs_out);
        if (*constants) return run_constants(const_name, const_digits, const_guard);
    } catch (const auric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
