#ifndef AURIC_ELEMENTARY_HPP
#define AURIC_ELEMENTARY_HPP

// Elementary functions over Decimal: square root, -log(1-y), exp, integer
// powers.  Each carries an explicit worst-case error statement; together
// with the guard digits these make the digit-count guarantees of the
// higher layers rigorous.

#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "auric/decimal.hpp"

namespace auric {

namespace detail {

inline std::size_t decimal_digit_count(const BigInt& n) {
    if (n.is_zero()) return 1;
    const BigInt magnitude = boost::multiprecision::abs(n);
    return magnitude.str().size();
}

// Exact integer square root by Newton's iteration r <- (r + n/r)/2.  The
// initial guess comes from a double-precision estimate of the leading
// digits; the iterate then decreases monotonically and stops at
// floor(sqrt(n)) after about log2(#digits) rounds.
inline BigInt isqrt_newton(const BigInt& n) {
    if (n.is_zero()) return BigInt(0);
    if (n < 0) throw DomainError("isqrt_newton: negative input");
    const std::size_t digits = decimal_digit_count(n);
    std::size_t shift = digits > 17 ? digits - 17 : 0;
    if (shift % 2 != 0) ++shift;
    const double top = BigInt(n / pow10(shift)).convert_to<double>();
    // Start strictly above the root so the iteration decreases monotonically.
    BigInt r = BigInt(static_cast<std::int64_t>(std::sqrt(top)) + 2) * pow10(shift / 2);
    while (true) {
        BigInt q = n / r;
        if (r <= q) return r;
        r = (r + q) >> 1;
    }
}

// Double approximation of a Decimal of any scale (top 18 digits only);
// used for cheap magnitude estimates, never for results.
inline double approx_double(const Decimal& a) {
    const std::size_t digits = decimal_digit_count(a.units());
    const std::size_t shift = digits > 18 ? digits - 18 : 0;
    const double top = BigInt(a.units() / pow10(shift)).convert_to<double>();
    return top * std::pow(10.0, static_cast<double>(shift) - static_cast<double>(a.scale()));
}

} // namespace detail

// Square root.  Computes the exact integer square root of a*10^(2w), so the
// result r satisfies r^2 <= a < (r + ulp)^2, hence |r^2 - a| <= 4*10^(-w)*r.
inline Decimal fx_sqrt(const Decimal& a, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_sqrt");
    if (a.is_negative()) throw DomainError("fx_sqrt: negative input");
    if (a.is_zero()) return ctx.zero();
    return ctx.from_units(detail::isqrt_newton(a.units() * ctx.scale_factor()));
}

struct LogSeriesResult {
    Decimal value;
    std::size_t terms = 0;
};

// -log(1-y) = sum_{i>=1} y^i / i for 0 < y < 1, summed until the omitted
// tail is certified below 1 ulp:
//
//   sum_{i>I} y^i/i  <=  y^(I+1) / ((I+1)(1-y))  <  10^(-w).
//
// The certificate is evaluated in integers on the represented power of y,
// inflated by ceil(1/(1-y)) ulp to cover the downward drift of the
// incremental powers, so it can never stop early.  Total error of the
// returned value is below (2*terms + 1) ulp: each term costs at most one
// ulp of power drift relative to its index plus one ulp of division
// truncation, and the certified tail adds less than one more.
inline LogSeriesResult fx_log1m_series(const Decimal& y, const Context& ctx) {
    detail::require_context_scale(y, ctx, "fx_log1m");
    if (y.sign() <= 0 || y.units() >= ctx.scale_factor())
        throw DomainError("fx_log1m: input must satisfy 0 < y < 1");

    const BigInt one_minus_y = ctx.scale_factor() - y.units();
    // ceil(1/(1-y)) in ulp: majorant of the steady-state power drift.
    const BigInt drift = (ctx.scale_factor() + one_minus_y - 1) / one_minus_y;

    Decimal power = y;
    BigInt sum = y.units();
    std::size_t terms = 1;
    while (true) {
        const Decimal next_power = fx_mul(power, y, ctx);
        // Stop once y^(terms+1)/((terms+1)(1-y)) < 10^(-w) is certain.
        if ((next_power.units() + drift) * ctx.scale_factor() <
            BigInt(terms + 1) * one_minus_y)
            break;
        ++terms;
        power = next_power;
        sum += power.units() / terms;
    }
    return {ctx.from_units(sum), terms};
}

inline Decimal fx_log1m(const Decimal& y, const Context& ctx) {
    return fx_log1m_series(y, ctx).value;
}

// exp(a) for |a| <= 8 (enough for e^phi and every product form in range).
// Argument reduction a = m*log2 + r with |r| <= log2/2 + 1 ulp, Taylor
// series on r, then exact scaling by 2^m (truncating once for negative m).
inline Decimal fx_exp(const Decimal& a, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_exp");
    if (a.magnitude() > 8 * ctx.scale_factor())
        throw RangeError("fx_exp: |argument| exceeds the supported cap of 8");

    const Decimal log2 = fx_log1m(ctx.from_ratio(1, 2), ctx); // -log(1/2)
    const Decimal q = fx_div(a, log2, ctx);
    const BigInt half_unit = ctx.scale_factor() / 2;
    BigInt rounded = q.units();
    if (rounded >= 0)
        rounded += half_unit;
    else
        rounded -= half_unit;
    const BigInt m_big = rounded / ctx.scale_factor();
    const auto m = m_big.convert_to<std::int64_t>(); // |a| <= 8 keeps |m| <= 12

    const Decimal r = fx_sub(a, fx_mul_int(log2, m), ctx);

    Decimal term = ctx.one();
    Decimal sum = ctx.one();
    for (std::int64_t n = 1; !term.is_zero(); ++n) {
        term = fx_div_int(fx_mul(term, r, ctx), n);
        sum = fx_add(sum, term, ctx);
    }

    if (m >= 0) return ctx.from_units(sum.units() * (BigInt(1) << static_cast<unsigned>(m)));
    return ctx.from_units(sum.units() / (BigInt(1) << static_cast<unsigned>(-m)));
}

// Binary exponentiation: at most 2*log2(k) multiplications, so at most
// 2*log2(k) ulp of relative error.  k = 0 returns 1; negative k is
// rejected.
inline Decimal fx_pow_int(const Decimal& a, std::int64_t k, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_pow_int");
    if (k < 0) throw RangeError("fx_pow_int: negative exponent");
    Decimal result = ctx.one();
    Decimal base = a;
    while (k > 0) {
        if (k & 1) result = fx_mul(result, base, ctx);
        k >>= 1;
        if (k > 0) base = fx_mul(base, base, ctx);
    }
    return result;
}

} // namespace auric

#endif // AURIC_ELEMENTARY_HPP
