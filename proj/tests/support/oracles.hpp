#ifndef AURIC_TEST_ORACLES_HPP
#define AURIC_TEST_ORACLES_HPP

// Reference material for the test suite.
//
// The digit strings below are frozen test vectors with 160 fractional
// digits, produced outside this library by an unrelated arbitrary-precision
// implementation and truncated (not rounded).  The runtime oracles further
// down (Fibonacci convergents, factorial series, brute tail sums) recompute
// key values through routes that share no code with the library, so the
// library cannot ratify its own bugs.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "auric/auric.hpp"

namespace oracle {

inline constexpr const char* kSqrt5 =
    "2.2360679774997896964091736687312762354406183596115257242708972454105209256378"
    "048994144144083787822749695081761507737835042532677244470738635863601215334527"
    "088667781";
inline constexpr const char* kGolden =
    "1.6180339887498948482045868343656381177203091798057628621354486227052604628189"
    "024497072072041893911374847540880753868917521266338622235369317931800607667263"
    "544333890";
inline constexpr const char* kGoldenInverse =
    "0.6180339887498948482045868343656381177203091798057628621354486227052604628189"
    "024497072072041893911374847540880753868917521266338622235369317931800607667263"
    "544333890";
inline constexpr const char* kE =
    "2.7182818284590452353602874713526624977572470936999595749669676277240766303535"
    "475945713821785251664274274663919320030599218174135966290435729003342952605956"
    "307381323";
inline constexpr const char* kExpGolden =
    "5.0431656433600286513118821892854247103235901754138463603020001967777869609108"
    "929428415187821843384653305404495551887666992776792280858157843174307323325699"
    "954554674";
inline constexpr const char* kExpGoldenInverse =
    "1.8552769586143047280770257045421006384781737524446210834281010402382539800370"
    "851469280927440892675990956413481817192458916808949500786263710387132421799594"
    "374102989";
inline constexpr const char* kLog2 =
    "0.6931471805599453094172321214581765680755001343602552541206800094933936219696"
    "947156058633269964186875420014810205706857336855202357581305570326707516350759"
    "619307275";
inline constexpr const char* kLogGolden =
    "0.4812118250596034474977589134243684231351843343856605196610181688401638676082"
    "217744120094291227234749972318399582936564112725683237267376227530592418644097"
    "541824170";
inline constexpr const char* kTwoLogGolden =
    "0.9624236501192068949955178268487368462703686687713210393220363376803277352164"
    "435488240188582454469499944636799165873128225451366474534752455061184837288195"
    "083648340";
inline constexpr const char* kSqrtE =
    "1.6487212707001281468486507878141635716537761007101480115750793116406610211942"
    "156086327765200563666430028666377563077970046711669752196091598409714524900597"
    "969294226";
inline constexpr const char* kExpOneThird =
    "1.3956124250860895286281253196025868375979065151994069826175167060317390156459"
    "518469697888172958302241352111844104188620961221232927778929393063493941717478"
    "924937462";
inline constexpr const char* kExpSevenThirds =
    "10.31225850132576502701557210853729697621034732760082872339269384592030526875"
    "605775162309216695496133629181349512312367181331642788380051652779983914270284"
    "0963026685";

// Reference string truncated to d fractional digits.
inline std::string digits(const char* ref, std::size_t d) {
    const std::string s(ref);
    const std::size_t dot = s.find('.');
    if (dot == std::string::npos || s.size() - dot - 1 < d)
        throw std::logic_error("oracle string too short for requested digits");
    return s.substr(0, dot + 1 + d);
}

// Reference value at the context's working scale (exact truncation, so it
// sits within 1 ulp below the true constant).
inline auric::Decimal ref_decimal(const char* ref, const auric::Context& ctx) {
    const auric::Decimal parsed = auric::Decimal::parse(ref);
    if (parsed.scale() < ctx.working_digits())
        throw std::logic_error("oracle string too short for working precision");
    return parsed.rescaled(ctx.working_digits());
}

// |a - b| in ulp of the common scale.
inline auric::BigInt units_diff(const auric::Decimal& a, const auric::Decimal& b) {
    if (a.scale() != b.scale()) throw std::logic_error("units_diff: scale mismatch");
    return boost::multiprecision::abs(a.units() - b.units());
}

// phi through Fibonacci convergents: |F(n+1)/F(n) - phi| < 1/F(n)^2, stopped
// once F(n)^2 > 10^(w+2); with the final truncated division the result is
// within 2 ulp of phi.  No square roots involved.
inline auric::Decimal fibonacci_phi(const auric::Context& ctx) {
    const auric::BigInt threshold = auric::pow10(ctx.working_digits() + 2);
    auric::BigInt a = 1, b = 1;
    while (a * a <= threshold) {
        auric::BigInt next = a + b;
        a = b;
        b = next;
    }
    return ctx.from_ratio(b, a);
}

// e through the factorial series sum 1/n! in integer arithmetic with five
// spare digits; within 2 ulp of e.  No exp or log involved.
inline auric::Decimal taylor_e(const auric::Context& ctx) {
    auric::BigInt term = auric::pow10(ctx.working_digits() + 5);
    auric::BigInt sum = term;
    for (std::int64_t n = 1; !term.is_zero(); ++n) {
        term /= n;
        sum += term;
    }
    return ctx.from_units(sum / auric::pow10(5));
}

// sum_{k=K+1}^{K+terms} x^k/(1-x^k): the brute tail that the closed-form
// truncation bound must dominate.  Truncating arithmetic only lowers it.
inline auric::Decimal brute_tail(const auric::Decimal& x, std::size_t K, std::size_t terms,
                                 const auric::Context& ctx) {
    auric::Decimal power = auric::fx_pow_int(x, static_cast<std::int64_t>(K), ctx);
    const auric::Decimal one = ctx.one();
    auric::BigInt sum = 0;
    for (std::size_t j = 0; j < terms; ++j) {
        power = auric::fx_mul(power, x, ctx);
        sum += auric::fx_div(power, auric::fx_sub(one, power, ctx), ctx).units();
    }
    return ctx.from_units(sum);
}

// x^{K+1} / ((1-x)(1-x^{K+1})), the closed-form majorant of the whole tail
// past K.
inline auric::Decimal closed_tail_bound(const auric::Decimal& x, std::size_t K,
                                        const auric::Context& ctx) {
    const auric::Decimal one = ctx.one();
    const auric::Decimal xk1 = auric::fx_pow_int(x, static_cast<std::int64_t>(K + 1), ctx);
    const auric::Decimal denom =
        auric::fx_mul(auric::fx_sub(one, x, ctx), auric::fx_sub(one, xk1, ctx), ctx);
    return auric::fx_div(xk1, denom, ctx);
}

} // namespace oracle

#endif // AURIC_TEST_ORACLES_HPP
