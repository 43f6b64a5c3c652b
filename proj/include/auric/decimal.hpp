#ifndef AURIC_DECIMAL_HPP
#define AURIC_DECIMAL_HPP

// Arbitrary-precision decimal fixed point.
//
// A Decimal is sign * magnitude * 10^(-scale) with an arbitrary-size integer
// magnitude and an explicit decimal scale, so digit-count guarantees and
// decimal rendering are exact by construction.  All arithmetic truncates
// toward zero; every operation states its worst-case error in ulp
// (1 ulp = 10^(-scale)).  Rigor comes from those per-operation bounds plus
// guard digits, not from interval arithmetic.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "auric/errors.hpp"

namespace auric {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow10(std::size_t exponent) {
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent));
}

// Immutable after construction; safe to share across threads.
class Decimal {
public:
    Decimal() = default;

    Decimal(BigInt units, std::size_t scale) : units_(std::move(units)), scale_(scale) {}

    static Decimal from_int(std::int64_t value, std::size_t scale) {
        return Decimal(BigInt(value) * pow10(scale), scale);
    }

    // Sign in {-1, 0, +1}; zero magnitude always reports sign 0.
    int sign() const { return units_.sign(); }

    // Signed scaled integer: value = units * 10^(-scale).
    const BigInt& units() const { return units_; }

    BigInt magnitude() const { return boost::multiprecision::abs(units_); }

    std::size_t scale() const { return scale_; }

    bool is_zero() const { return units_.is_zero(); }

    bool is_negative() const { return units_ < 0; }

    // Exact when raising the scale; truncates toward zero when lowering it
    // (error < 1 ulp of the new scale).
    Decimal rescaled(std::size_t new_scale) const {
        if (new_scale == scale_) return *this;
        if (new_scale > scale_) return Decimal(units_ * pow10(new_scale - scale_), new_scale);
        return Decimal(units_ / pow10(scale_ - new_scale), new_scale);
    }

    Decimal negated() const { return Decimal(-units_, scale_); }

    Decimal abs() const { return Decimal(boost::multiprecision::abs(units_), scale_); }

    // Renders sign, integer part, '.', then exactly scale() fractional
    // digits.  No exponent form, ever.  A scale of zero prints as a plain
    // integer.
    std::string str() const {
        const BigInt ten_s = pow10(scale_);
        BigInt mag = boost::multiprecision::abs(units_);
        BigInt whole = mag / ten_s;
        BigInt frac = mag % ten_s;
        std::string out;
        if (units_ < 0) out.push_back('-');
        out += whole.str();
        if (scale_ > 0) {
            std::string f = frac.str();
            out.push_back('.');
            out.append(scale_ - f.size(), '0');
            out += f;
        }
        return out;
    }

    // Parses [+-]digits[.digits]; the result's scale is the number of
    // fractional digits in the text.  Strings printed by str() round-trip
    // to an equal value.
    static Decimal parse(std::string_view text) {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        BigInt units = 0;
        std::size_t scale = 0;
        bool seen_digit = false;
        bool seen_dot = false;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c == '.') {
                if (seen_dot) throw ParseError("invalid decimal literal: '" + std::string(text) + "'");
                seen_dot = true;
            } else if (c >= '0' && c <= '9') {
                units *= 10;
                units += c - '0';
                seen_digit = true;
                if (seen_dot) ++scale;
            } else {
                throw ParseError("invalid decimal literal: '" + std::string(text) + "'");
            }
        }
        if (!seen_digit) throw ParseError("invalid decimal literal: '" + std::string(text) + "'");
        if (negative) units = -units;
        return Decimal(std::move(units), scale);
    }

private:
    BigInt units_;
    std::size_t scale_ = 0;
};

namespace detail {

inline void require_same_scale(const Decimal& a, const Decimal& b, const char* op) {
    if (a.scale() != b.scale())
        throw ContractViolation(std::string(op) + ": operand scales differ (" +
                                std::to_string(a.scale()) + " vs " + std::to_string(b.scale()) + ")");
}

} // namespace detail

// Comparisons are defined for equal scales only: then they reduce to integer
// comparison of the scaled units.
inline bool operator==(const Decimal& a, const Decimal& b) {
    detail::require_same_scale(a, b, "compare");
    return a.units() == b.units();
}
inline bool operator!=(const Decimal& a, const Decimal& b) { return !(a == b); }
inline bool operator<(const Decimal& a, const Decimal& b) {
    detail::require_same_scale(a, b, "compare");
    return a.units() < b.units();
}
inline bool operator<=(const Decimal& a, const Decimal& b) { return !(b < a); }
inline bool operator>(const Decimal& a, const Decimal& b) { return b < a; }
inline bool operator>=(const Decimal& a, const Decimal& b) { return !(a < b); }

// Working-precision context: D requested digits plus G guard digits.  Every
// operation run under a context produces values at scale D + G; the guard
// absorbs truncation bias before results are cut back to D digits.
class Context {
public:
    static constexpr std::size_t kDefaultGuardDigits = 20;
    static constexpr std::size_t kMinGuardDigits = 20;

    explicit Context(std::size_t target_digits, std::size_t guard_digits = kDefaultGuardDigits)
        : target_digits_(target_digits), guard_digits_(guard_digits),
          scale_factor_(pow10(target_digits + guard_digits)) {
        if (target_digits_ == 0) throw ContractViolation("Context: target_digits must be >= 1");
        if (guard_digits_ < kMinGuardDigits)
            throw ContractViolation("Context: guard_digits must be >= " + std::to_string(kMinGuardDigits));
    }

    std::size_t target_digits() const { return target_digits_; }
    std::size_t guard_digits() const { return guard_digits_; }
    std::size_t working_digits() const { return target_digits_ + guard_digits_; }

    // 10^working_digits, shared by the rescaling operations.
    const BigInt& scale_factor() const { return scale_factor_; }

    Decimal zero() const { return Decimal(BigInt(0), working_digits()); }
    Decimal one() const { return from_int(1); }
    Decimal ulp() const { return Decimal(BigInt(1), working_digits()); }

    Decimal from_int(std::int64_t value) const { return Decimal(BigInt(value) * scale_factor_, working_digits()); }

    Decimal from_units(BigInt units) const { return Decimal(std::move(units), working_digits()); }

    // Accepts a decimal literal or a "p/q" rational; either way the result
    // carries working_digits() fractional digits (truncated if the literal
    // is longer).
    Decimal from_text(std::string_view text) const;

    Decimal from_ratio(const BigInt& num, const BigInt& den) const;

private:
    std::size_t target_digits_;
    std::size_t guard_digits_;
    BigInt scale_factor_;
};

namespace detail {

inline void require_context_scale(const Decimal& a, const Context& ctx, const char* op) {
    if (a.scale() != ctx.working_digits())
        throw ContractViolation(std::string(op) + ": operand scale " + std::to_string(a.scale()) +
                                " does not match context working precision " +
                                std::to_string(ctx.working_digits()));
}

} // namespace detail

// Exact: integer addition of equally scaled units.
inline Decimal fx_add(const Decimal& a, const Decimal& b, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_add");
    detail::require_context_scale(b, ctx, "fx_add");
    return Decimal(a.units() + b.units(), a.scale());
}

// Exact, like fx_add.
inline Decimal fx_sub(const Decimal& a, const Decimal& b, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_sub");
    detail::require_context_scale(b, ctx, "fx_sub");
    return Decimal(a.units() - b.units(), a.scale());
}

// Truncated product: |error| < 1 ulp.
inline Decimal fx_mul(const Decimal& a, const Decimal& b, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_mul");
    detail::require_context_scale(b, ctx, "fx_mul");
    return Decimal((a.units() * b.units()) / ctx.scale_factor(), a.scale());
}

// Truncated quotient: |error| < 1 ulp.
inline Decimal fx_div(const Decimal& a, const Decimal& b, const Context& ctx) {
    detail::require_context_scale(a, ctx, "fx_div");
    detail::require_context_scale(b, ctx, "fx_div");
    if (b.is_zero()) throw DomainError("fx_div: division by zero");
    return Decimal((a.units() * ctx.scale_factor()) / b.units(), a.scale());
}

// Exact product with a machine integer.
inline Decimal fx_mul_int(const Decimal& a, std::int64_t k) {
    return Decimal(a.units() * k, a.scale());
}

// Truncated quotient by a machine integer: |error| < 1 ulp.
inline Decimal fx_div_int(const Decimal& a, std::int64_t k) {
    if (k == 0) throw DomainError("fx_div_int: division by zero");
    return Decimal(a.units() / k, a.scale());
}

// Largest m with |a - b| < 10^(-m), capped at the common scale; 0 when the
// values differ by one or more.  The pass metric of every verification.
inline std::size_t matched_digits(const Decimal& a, const Decimal& b) {
    detail::require_same_scale(a, b, "matched_digits");
    BigInt diff = boost::multiprecision::abs(a.units() - b.units());
    if (diff.is_zero()) return a.scale();
    const std::size_t digits = diff.str().size(); // diff < 10^digits <= 10*diff
    if (digits >= a.scale()) return 0;
    return a.scale() - digits;
}

inline Decimal Context::from_ratio(const BigInt& num, const BigInt& den) const {
    if (den.is_zero()) throw DomainError("from_ratio: zero denominator");
    return Decimal((num * scale_factor_) / den, working_digits());
}

inline Decimal Context::from_text(std::string_view text) const {
    const std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        const Decimal p = Decimal::parse(num);
        const Decimal q = Decimal::parse(den);
        if (p.scale() != 0 || q.scale() != 0)
            throw ParseError("rational literal must be integer/integer: '" + std::string(text) + "'");
        if (q.is_zero()) throw ParseError("rational literal has zero denominator: '" + std::string(text) + "'");
        return from_ratio(p.units(), q.units());
    }
    return Decimal::parse(text).rescaled(working_digits());
}

} // namespace auric

#endif // AURIC_DECIMAL_HPP
