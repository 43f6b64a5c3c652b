// Shows how many series terms the certified truncation needs as the digit
// target grows, and that the evaluated sum really matches the closed form
// x/(1-x) to the requested precision.
//
// Usage: convergence_table [x]   (default 1/2; accepts p/q, decimals,
//                                 or golden-inverse)

#include <iomanip>
#include <iostream>
#include <string>

#include "auric/auric.hpp"

int main(int argc, char** argv) {
    const std::string point_text = argc > 1 ? argv[1] : "1/2";
    try {
        const auric::EvalPoint point = auric::EvalPoint::parse(point_text);
        std::cout << "totient-weighted log series at x = " << point.text() << "\n\n";
        std::cout << std::setw(8) << "digits" << std::setw(8) << "terms" << std::setw(10)
                  << "matched" << "\n";

        for (std::size_t digits : {10, 20, 30, 40, 50, 60}) {
            const auric::Context ctx(digits);
            const auric::Decimal x = point.materialize(ctx);
            const auric::ArithFnTable table = auric::sieve_build(static_cast<std::uint32_t>(
                auric::truncation_index(x, digits)));
            const auric::EvalResult r = auric::eval_weighted_log_series(
                auric::SeriesSpec{auric::Weight::totient, x, digits,
                                  auric::Context::kDefaultGuardDigits,
                                  point.materialization_error_ulps()},
                table);
            const auric::Decimal closed =
                auric::fx_div(x, auric::fx_sub(ctx.one(), x, ctx), ctx);
            std::cout << std::setw(8) << digits << std::setw(8) << r.terms_used << std::setw(10)
                      << auric::matched_digits(r.value, closed) << "\n";
        }
    } catch (const auric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
