#ifndef AURIC_POINT_HPP
#define AURIC_POINT_HPP

// An evaluation point x in (0,1) as the user specifies it: the named point
// 1/phi (so its precision scales with the requested digits), an exact
// rational p/q, or a decimal literal.

#include <string>
#include <string_view>

#include "auric/constants.hpp"
#include "auric/decimal.hpp"

namespace auric {

class EvalPoint {
public:
    enum class Kind { golden_inverse, rational, decimal };

    static EvalPoint golden_inverse() {
        EvalPoint p;
        p.kind_ = Kind::golden_inverse;
        p.text_ = "golden-inverse";
        return p;
    }

    static EvalPoint rational(BigInt num, BigInt den) {
        EvalPoint p;
        p.kind_ = Kind::rational;
        p.num_ = std::move(num);
        p.den_ = std::move(den);
        p.text_ = p.num_.str() + "/" + p.den_.str();
        return p;
    }

    // "golden-inverse", "p/q", or a decimal literal.
    static EvalPoint parse(std::string_view text) {
        if (text == "golden-inverse") return golden_inverse();
        if (text.find('/') != std::string_view::npos) {
            const std::size_t slash = text.find('/');
            const Decimal p = Decimal::parse(text.substr(0, slash));
            const Decimal q = Decimal::parse(text.substr(slash + 1));
            if (p.scale() != 0 || q.scale() != 0)
                throw ParseError("rational point must be integer/integer: '" + std::string(text) + "'");
            return rational(p.units(), q.units());
        }
        EvalPoint pt;
        pt.kind_ = Kind::decimal;
        pt.decimal_ = Decimal::parse(text);
        pt.text_ = std::string(text);
        return pt;
    }

    Kind kind() const { return kind_; }
    const std::string& text() const { return text_; }

    // The point at the context's working precision.
    Decimal materialize(const Context& ctx) const {
        switch (kind_) {
        case Kind::golden_inverse: return constant(Constant::golden_inverse, ctx);
        case Kind::rational: return ctx.from_ratio(num_, den_);
        case Kind::decimal: return decimal_.rescaled(ctx.working_digits());
        }
        throw DomainError("EvalPoint: invalid kind");
    }

    // Worst-case |materialized - intended| in ulp of the working scale.
    // golden-inverse: sqrt (2 ulp) plus one truncated division; rationals:
    // one truncated division; decimal literals define the point exactly
    // (longer literals are truncated into the point itself).
    std::size_t materialization_error_ulps() const {
        switch (kind_) {
        case Kind::golden_inverse: return 4;
        case Kind::rational: return 1;
        case Kind::decimal: return 0;
        }
        return 0;
    }

private:
    Kind kind_ = Kind::golden_inverse;
    BigInt num_;
    BigInt den_;
    Decimal decimal_;
    std::string text_;
};

} // namespace auric

#endif // AURIC_POINT_HPP
