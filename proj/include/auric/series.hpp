#ifndef AURIC_SERIES_HPP
#define AURIC_SERIES_HPP

// Evaluator for the weighted logarithmic series
//
//     S(x) = -sum_{k>=1} w(k)/k * log(1 - x^k),   0 < x < 1,
//
// with w = Euler totient or Moebius mu, and for its exponential
// P(x) = exp(S(x)).  Every result carries a certified truncation tail
// bound and an accounted rounding budget, both in units of the final
// answer, so callers can verify digits without trusting the evaluator.

#include <cstdint>
#include <cstdlib>
#include <string>

#include "auric/arith_functions.hpp"
#include "auric/decimal.hpp"
#include "auric/elementary.hpp"
#include "auric/errors.hpp"

namespace auric {

struct SeriesSpec {
    Weight weight = Weight::totient;
    Decimal x;                     // at scale target_digits + guard_digits
    std::size_t target_digits = 50;
    std::size_t guard_digits = 20;
    std::size_t x_error_ulps = 0;  // |x - intended point|, in working ulp
};

struct EvalResult {
    Decimal value;
    std::size_t terms_used = 0;
    Decimal tail_bound;       // certified |true sum - untruncated eval|
    Decimal rounding_budget;  // certified |untruncated eval - value|
};

namespace detail {

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return (a + b - 1) / b;
}

// Tail digits beyond the target before truncation stops.
inline constexpr std::size_t kTailGuardDigits = 2;

// Hard cap on series length; past this x is so close to 1 that the
// arithmetic-function table alone would exhaust memory.
inline constexpr std::size_t kMaxTruncationIndex = 10'000'000;

inline void check_series_point(const Decimal& x, const Context& ctx) {
    if (x.scale() != ctx.working_digits())
        throw ContractViolation("series point must be at working scale " +
                                std::to_string(ctx.working_digits()) + ", got scale " +
                                std::to_string(x.scale()));
    if (x.sign() <= 0 || x.units() >= ctx.scale_factor())
        throw DomainError("series point must satisfy 0 < x < 1, got " + x.str());
}

struct TailCertificate {
    std::size_t index = 0;  // truncation index K
    BigInt tail_units;      // ceil(bound * 10^w) for the tail past K
};

// Smallest K with  x^{K+1} / ((1-x)(1-x^{K+1})) < 10^-(D + kTailGuardDigits).
// The bound dominates sum_{k>K} x^k/(1-x^k), which in turn dominates the
// dropped terms since |w(k)/k| <= 1 and -log(1-y) <= y/(1-y).
//
// All quantities are certified over the truncating arithmetic: after j
// incremental multiplications the computed power p satisfies
// p <= x^j < p + j ulp, and since the powers shrink geometrically the
// accumulated drift stays below ceil(1/(1-x)) ulp.
inline TailCertificate certified_truncation(const Decimal& x, const Context& ctx) {
    check_series_point(x, ctx);
    const std::size_t w = ctx.working_digits();
    const BigInt& sf = ctx.scale_factor();
    const BigInt threshold_units = pow10(w - ctx.target_digits() - kTailGuardDigits);
    const BigInt omx_units = sf - x.units();
    const BigInt drift = ceil_div(sf, omx_units);

    Decimal power = fx_mul(x, x, ctx);  // x^{K+1} for K = 1
    for (std::size_t k = 1;; ++k) {
        const BigInt numer = power.units() + drift;
        const BigInt omp_units = sf - power.units() - drift;  // underestimates 1 - x^{k+1}
        if (omp_units > 0) {
            // bound = numer/sf / ((omx/sf)(omp/sf)); in units of 10^-w that
            // is numer * sf^2 / (omx * omp), rounded up.
            const BigInt denom = omx_units * omp_units;
            const BigInt tail_units = ceil_div(numer * sf * sf, denom);
            if (tail_units < threshold_units)
                return TailCertificate{k, tail_units};
        }
        if (k >= kMaxTruncationIndex)
            throw RangeError("series truncation index exceeds " +
                             std::to_string(kMaxTruncationIndex) + "; x is too close to 1");
        power = fx_mul(power, x, ctx);
    }
}

} // namespace detail

// Number of leading terms needed for D correct digits at point x.
inline std::size_t truncation_index(const Decimal& x, std::size_t target_digits,
                                    std::size_t guard_digits = Context::kDefaultGuardDigits) {
    const Context ctx(target_digits, guard_digits);
    return detail::certified_truncation(x, ctx).index;
}

// S(x) truncated after truncation_index terms.  The rounding budget adds
// (2I_k + 2) ulp per retained term (log1m contributes (2I_k + 1), the
// weighted division one more) plus the propagated point error
// x_error_ulps * ceil(1/(1-x))^3, a majorant of |S'| near x.
inline EvalResult eval_weighted_log_series(const SeriesSpec& spec, const ArithFnTable& table) {
    const Context ctx(spec.target_digits, spec.guard_digits);
    const detail::TailCertificate cert = detail::certified_truncation(spec.x, ctx);
    if (table.limit() < cert.index)
        throw ContractViolation("arithmetic table covers 1.." + std::to_string(table.limit()) +
                                " but the series needs 1.." + std::to_string(cert.index) +
                                " terms");

    const std::size_t w = ctx.working_digits();
    BigInt sum_units = 0;
    BigInt budget_ulps = 0;
    Decimal power = spec.x;
    for (std::size_t k = 1; k <= cert.index; ++k) {
        if (k > 1) power = fx_mul(power, spec.x, ctx);
        const std::int64_t wk = weight_value(spec.weight, k, table);
        if (wk == 0) continue;
        const LogSeriesResult log = fx_log1m_series(power, ctx);
        // log.value carries -log(1 - x^k) >= 0, so the sum is
        // sum_k w(k)/k * log.value directly.
        sum_units += log.value.units() * wk / std::int64_t(k);
        budget_ulps += 2 * BigInt(log.terms) + 2;
    }
    // Power drift: the k-th power is off by at most k ulp, which feeds the
    // log argument; summed over all terms it stays below the same
    // geometric majorant used for the point error.
    const BigInt inv_omx = detail::ceil_div(ctx.scale_factor(), ctx.scale_factor() - spec.x.units());
    budget_ulps += inv_omx * inv_omx * inv_omx * (1 + BigInt(spec.x_error_ulps));

    return EvalResult{ctx.from_units(sum_units), cert.index, Decimal(cert.tail_units, w),
                      Decimal(budget_ulps, w)};
}

// Extra digits a product-form evaluation adds so that the amplification
// exp(S) <= exp(x/(1-x)) cannot push the inner bounds past the target.
inline std::size_t product_extra_digits(const Decimal& x) {
    const double xd = detail::approx_double(x);
    const double s_est = xd / (1.0 - xd);
    if (s_est <= 0) return 0;
    const std::size_t extra = static_cast<std::size_t>(s_est / 2.302585092994046) + 1;
    return extra > 8 ? 8 : extra;
}

// P(x) = exp(S(x)).  The series is evaluated with enough extra digits to
// absorb the amplification |exp'| = exp(S), so the certified bounds of the
// result stay below one unit in the target digit.
inline EvalResult eval_product_form(const SeriesSpec& spec, const ArithFnTable& table) {
    const Context ctx(spec.target_digits, spec.guard_digits);
    detail::check_series_point(spec.x, ctx);
    const std::size_t extra = product_extra_digits(spec.x);

    SeriesSpec inner = spec;
    inner.target_digits = spec.target_digits + extra;
    inner.x = spec.x.rescaled(spec.target_digits + extra + spec.guard_digits);
    // The padded point keeps its absolute error, which is 10^extra finer ulps.
    inner.x_error_ulps = spec.x_error_ulps;
    for (std::size_t i = 0; i < extra; ++i) inner.x_error_ulps *= 10;
    const Context inner_ctx(inner.target_digits, inner.guard_digits);

    const EvalResult sum = eval_weighted_log_series(inner, table);
    const Decimal value_inner = fx_exp(sum.value, inner_ctx);

    const std::size_t w = ctx.working_digits();
    const Decimal value = value_inner.rescaled(w);

    // Integer majorant of exp(S) for scaling the inner bounds.
    const BigInt amplification = value_inner.units() / inner_ctx.scale_factor() + 2;
    const BigInt down = pow10(extra);
    const BigInt tail_units =
        detail::ceil_div(sum.tail_bound.units() * amplification, down) + 1;
    // exp itself: argument reduction and Taylor truncation, coarsely
    // majorized; |m| <= 12 under the exp-argument cap.
    const BigInt exp_budget = BigInt(1) << 17;
    BigInt budget_ulps =
        detail::ceil_div(sum.rounding_budget.units() * amplification, down) + exp_budget + 2;

    return EvalResult{value, sum.terms_used, Decimal(tail_units, w), Decimal(budget_ulps, w)};
}

} // namespace auric

#endif // AURIC_SERIES_HPP
