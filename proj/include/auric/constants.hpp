#ifndef AURIC_CONSTANTS_HPP
#define AURIC_CONSTANTS_HPP

// Named constants: sqrt(5), the golden ratio phi = (1+sqrt(5))/2, its
// reciprocal 1/phi = phi - 1, and e = exp(1).  Each is recomputed at the
// context's working precision; there is no cache and no global state.

#include <string>
#include <string_view>

#include "auric/decimal.hpp"
#include "auric/elementary.hpp"

namespace auric {

enum class Constant { sqrt5, golden, golden_inverse, e };

inline Decimal constant(Constant name, const Context& ctx) {
    switch (name) {
    case Constant::sqrt5:
        return fx_sqrt(ctx.from_int(5), ctx);
    case Constant::golden:
        return fx_div_int(fx_add(ctx.one(), fx_sqrt(ctx.from_int(5), ctx), ctx), 2);
    case Constant::golden_inverse:
        // 1/phi = phi - 1; the subtraction is exact.
        return fx_sub(constant(Constant::golden, ctx), ctx.one(), ctx);
    case Constant::e:
        return fx_exp(ctx.one(), ctx);
    }
    throw DomainError("constant: unknown name");
}

inline Constant constant_from_name(std::string_view name) {
    if (name == "sqrt5") return Constant::sqrt5;
    if (name == "golden") return Constant::golden;
    if (name == "golden_inverse" || name == "golden-inverse") return Constant::golden_inverse;
    if (name == "e") return Constant::e;
    throw DomainError("constant: unknown name '" + std::string(name) + "'");
}

inline std::string constant_name(Constant c) {
    switch (c) {
    case Constant::sqrt5: return "sqrt5";
    case Constant::golden: return "golden";
    case Constant::golden_inverse: return "golden_inverse";
    case Constant::e: return "e";
    }
    return "?";
}

} // namespace auric

#endif // AURIC_CONSTANTS_HPP
