// Prints phi and 1/phi two ways: from the closed-form constants (square
// root) and from the weighted log-series evaluated at x = 1/phi.  The two
// columns agreeing digit for digit is the whole point of the library.
//
// Usage: golden_digits [digits]   (default 60)

#include <cstdlib>
#include <iostream>
#include <string>

#include "auric/auric.hpp"

int main(int argc, char** argv) {
    std::size_t digits = 60;
    if (argc > 1) digits = static_cast<std::size_t>(std::strtoul(argv[1], nullptr, 10));
    if (digits == 0 || digits > 2000) {
        std::cerr << "digits must be in 1..2000\n";
        return 2;
    }

    try {
        const auric::Context ctx(digits);
        const auric::Decimal x = auric::constant(auric::Constant::golden_inverse, ctx);
        const auric::ArithFnTable table = auric::sieve_build(
            static_cast<std::uint32_t>(auric::truncation_index(x, digits)));

        const auric::EvalResult tot = auric::eval_weighted_log_series(
            auric::SeriesSpec{auric::Weight::totient, x, digits, auric::Context::kDefaultGuardDigits, 4},
            table);
        const auric::EvalResult moe = auric::eval_weighted_log_series(
            auric::SeriesSpec{auric::Weight::moebius, x, digits, auric::Context::kDefaultGuardDigits, 4},
            table);

        const auric::Decimal phi_const = auric::constant(auric::Constant::golden, ctx);
        std::cout << "phi   via sqrt:     " << phi_const.rescaled(digits).str() << "\n";
        std::cout << "phi   via series:   " << tot.value.rescaled(digits).str() << "\n";
        std::cout << "1/phi via sqrt:     " << x.rescaled(digits).str() << "\n";
        std::cout << "1/phi via series:   " << moe.value.rescaled(digits).str() << "\n";
        std::cout << "series terms:       " << tot.terms_used << "\n";
        std::cout << "digits matched:     "
                  << auric::matched_digits(tot.value, phi_const) << " (phi), "
                  << auric::matched_digits(moe.value, x) << " (1/phi)\n";
    } catch (const auric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
