#ifndef AURIC_IDENTITIES_HPP
#define AURIC_IDENTITIES_HPP

// Verification harness.  Each identity binds a series evaluation (lhs) to a
// closed form computed through a disjoint path (rhs: constants and exp only)
// and reports how many decimal digits the sides share.  Failures always
// carry a reason; errors become failing reports, never silent passes.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "auric/arith_functions.hpp"
#include "auric/constants.hpp"
#include "auric/decimal.hpp"
#include "auric/elementary.hpp"
#include "auric/golden_exact.hpp"
#include "auric/point.hpp"
#include "auric/series.hpp"

namespace auric {

enum class IdentityId {
    theorem_totient,
    theorem_moebius,
    corollary1,
    corollary2,
    corollary3_totient,
    corollary3_moebius,
    corollary3_relation,
    lemma2_totient,
    lemma2_moebius,
    general_product_totient,
    general_product_moebius,
};

inline const char* identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::theorem_totient: return "theorem_totient";
    case IdentityId::theorem_moebius: return "theorem_moebius";
    case IdentityId::corollary1: return "corollary1";
    case IdentityId::corollary2: return "corollary2";
    case IdentityId::corollary3_totient: return "corollary3_totient";
    case IdentityId::corollary3_moebius: return "corollary3_moebius";
    case IdentityId::corollary3_relation: return "corollary3_relation";
    case IdentityId::lemma2_totient: return "lemma2_totient";
    case IdentityId::lemma2_moebius: return "lemma2_moebius";
    case IdentityId::general_product_totient: return "general_product_totient";
    case IdentityId::general_product_moebius: return "general_product_moebius";
    }
    throw DomainError("identity_name: invalid identity id");
}

inline IdentityId identity_from_name(std::string_view name) {
    static constexpr IdentityId all[] = {
        IdentityId::theorem_totient,        IdentityId::theorem_moebius,
        IdentityId::corollary1,             IdentityId::corollary2,
        IdentityId::corollary3_totient,     IdentityId::corollary3_moebius,
        IdentityId::corollary3_relation,    IdentityId::lemma2_totient,
        IdentityId::lemma2_moebius,         IdentityId::general_product_totient,
        IdentityId::general_product_moebius,
    };
    for (IdentityId id : all)
        if (name == identity_name(id)) return id;
    throw DomainError("unknown identity '" + std::string(name) + "'");
}

// lemma2_* and general_product_* accept a point; the rest are pinned to 1/phi.
inline bool identity_takes_point(IdentityId id) {
    switch (id) {
    case IdentityId::lemma2_totient:
    case IdentityId::lemma2_moebius:
    case IdentityId::general_product_totient:
    case IdentityId::general_product_moebius: return true;
    default: return false;
    }
}

inline bool identity_uses_product_form(IdentityId id) {
    switch (id) {
    case IdentityId::corollary3_totient:
    case IdentityId::corollary3_moebius:
    case IdentityId::corollary3_relation:
    case IdentityId::general_product_totient:
    case IdentityId::general_product_moebius: return true;
    default: return false;
    }
}

struct VerifyOptions {
    std::size_t digits = 50;
    std::size_t guard = Context::kDefaultGuardDigits;
    EvalPoint point = EvalPoint::golden_inverse();
};

struct VerificationReport {
    IdentityId identity = IdentityId::theorem_totient;
    std::string point;
    std::size_t digits_requested = 0;
    std::string lhs;
    std::string rhs;
    std::size_t matched = 0;
    std::size_t terms_used = 0;
    double elapsed_seconds = 0.0;
    bool pass = false;
    std::string reason;  // empty on a clean pass
};

namespace detail {

// The proof's closed-form simplification chain, checked exactly in Q(phi):
// phi^2 = phi + 1, 1/phi = phi - 1, 1/(phi - 1) = phi, (1/phi)/(1 - 1/phi) = phi.
inline void check_golden_simplification_chain() {
    const GoldenExact one = GoldenExact::from_int(1);
    const GoldenExact phi = GoldenExact::phi();
    const GoldenExact inv = phi.inverse();
    const bool ok = phi * phi == phi + one && inv == phi - one &&
                    one / (phi - one) == phi && inv / (one - inv) == phi;
    if (!ok) throw ContractViolation("exact golden-ratio simplification chain failed");
}

struct SidePair {
    Decimal lhs;
    Decimal rhs;
    std::size_t terms = 0;
};

inline SidePair compute_sides(IdentityId id, const VerifyOptions& opts,
                              const ArithFnTable& table) {
    const Context ctx(opts.digits, opts.guard);
    const EvalPoint pt = identity_takes_point(id) ? opts.point : EvalPoint::golden_inverse();
    const Decimal x = pt.materialize(ctx);
    const std::size_t xerr = pt.materialization_error_ulps();

    const auto sum_form = [&](Weight w) {
        return eval_weighted_log_series(SeriesSpec{w, x, opts.digits, opts.guard, xerr}, table);
    };
    const auto product_form = [&](Weight w) {
        return eval_product_form(SeriesSpec{w, x, opts.digits, opts.guard, xerr}, table);
    };

    switch (id) {
    case IdentityId::theorem_totient: {
        check_golden_simplification_chain();
        const EvalResult r = sum_form(Weight::totient);
        return {r.value, constant(Constant::golden, ctx), r.terms_used};
    }
    case IdentityId::theorem_moebius: {
        const EvalResult r = sum_form(Weight::moebius);
        return {r.value, constant(Constant::golden_inverse, ctx), r.terms_used};
    }
    case IdentityId::corollary1: {
        const EvalResult t = sum_form(Weight::totient);
        const EvalResult m = sum_form(Weight::moebius);
        return {fx_sub(t.value, m.value, ctx), ctx.one(), t.terms_used};
    }
    case IdentityId::corollary2: {
        const EvalResult t = sum_form(Weight::totient);
        const EvalResult m = sum_form(Weight::moebius);
        return {fx_exp(fx_sub(t.value, m.value, ctx), ctx), constant(Constant::e, ctx),
                t.terms_used};
    }
    case IdentityId::corollary3_totient: {
        const EvalResult r = product_form(Weight::totient);
        return {r.value, fx_exp(constant(Constant::golden, ctx), ctx), r.terms_used};
    }
    case IdentityId::corollary3_moebius: {
        const EvalResult r = product_form(Weight::moebius);
        return {r.value, fx_exp(constant(Constant::golden_inverse, ctx), ctx), r.terms_used};
    }
    case IdentityId::corollary3_relation: {
        // e^(1/phi) = e^phi / e, both sides through unrelated routes.
        const EvalResult r = product_form(Weight::moebius);
        const Decimal rhs =
            fx_div(fx_exp(constant(Constant::golden, ctx), ctx), constant(Constant::e, ctx), ctx);
        return {r.value, rhs, r.terms_used};
    }
    case IdentityId::lemma2_totient: {
        const EvalResult r = sum_form(Weight::totient);
        return {r.value, fx_div(x, fx_sub(ctx.one(), x, ctx), ctx), r.terms_used};
    }
    case IdentityId::lemma2_moebius: {
        const EvalResult r = sum_form(Weight::moebius);
        return {r.value, x, r.terms_used};
    }
    case IdentityId::general_product_totient: {
        const EvalResult r = product_form(Weight::totient);
        return {r.value, fx_exp(fx_div(x, fx_sub(ctx.one(), x, ctx), ctx), ctx), r.terms_used};
    }
    case IdentityId::general_product_moebius: {
        const EvalResult r = product_form(Weight::moebius);
        return {r.value, fx_exp(x, ctx), r.terms_used};
    }
    }
    throw DomainError("verify: invalid identity id");
}

} // namespace detail

// Series terms any verify of this identity will consume; sizes the table.
inline std::size_t required_table_limit(IdentityId id, const VerifyOptions& opts = {}) {
    const Context ctx(opts.digits, opts.guard);
    const EvalPoint pt = identity_takes_point(id) ? opts.point : EvalPoint::golden_inverse();
    const Decimal x = pt.materialize(ctx);
    if (identity_uses_product_form(id)) {
        const std::size_t extra = product_extra_digits(x);
        return truncation_index(x.rescaled(ctx.working_digits() + extra), opts.digits + extra,
                                opts.guard);
    }
    return truncation_index(x, opts.digits, opts.guard);
}

inline VerificationReport verify(IdentityId id, const VerifyOptions& opts,
                                 const ArithFnTable& table) {
    VerificationReport rep;
    rep.identity = id;
    rep.point = (identity_takes_point(id) ? opts.point : EvalPoint::golden_inverse()).text();
    rep.digits_requested = opts.digits;
    const auto start = std::chrono::steady_clock::now();
    try {
        const detail::SidePair sides = detail::compute_sides(id, opts, table);
        rep.lhs = sides.lhs.rescaled(opts.digits).str();
        rep.rhs = sides.rhs.rescaled(opts.digits).str();
        rep.matched = matched_digits(sides.lhs, sides.rhs);
        rep.terms_used = sides.terms;
        rep.pass = rep.matched >= rep.digits_requested;
        if (!rep.pass)
            rep.reason = "sides agree to " + std::to_string(rep.matched) + " digits, need " +
                         std::to_string(rep.digits_requested);
    } catch (const Error& err) {
        rep.pass = false;
        rep.reason = err.what();
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline VerificationReport verify(IdentityId id, const VerifyOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    try {
        std::size_t limit = required_table_limit(id, opts);
        if (limit < 16) limit = 16;
        const ArithFnTable table = sieve_build(static_cast<std::uint32_t>(limit));
        return verify(id, opts, table);
    } catch (const Error& err) {
        VerificationReport rep;
        rep.identity = id;
        rep.point = (identity_takes_point(id) ? opts.point : EvalPoint::golden_inverse()).text();
        rep.digits_requested = opts.digits;
        rep.pass = false;
        rep.reason = err.what();
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
}

namespace detail {

// The fixed identities plus lemma2 at x in {1/4, 1/2, 7/10}: 13 reports,
// ordered by identity, then by ascending point.
inline std::vector<std::pair<IdentityId, EvalPoint>> verify_all_plan() {
    std::vector<std::pair<IdentityId, EvalPoint>> plan;
    for (IdentityId id : {IdentityId::theorem_totient, IdentityId::theorem_moebius,
                          IdentityId::corollary1, IdentityId::corollary2,
                          IdentityId::corollary3_totient, IdentityId::corollary3_moebius,
                          IdentityId::corollary3_relation})
        plan.emplace_back(id, EvalPoint::golden_inverse());
    for (IdentityId id : {IdentityId::lemma2_totient, IdentityId::lemma2_moebius})
        for (const auto& [num, den] : {std::pair<int, int>{1, 4}, {1, 2}, {7, 10}})
            plan.emplace_back(id, EvalPoint::rational(num, den));
    return plan;
}

} // namespace detail

inline std::vector<VerificationReport> verify_all(std::size_t digits = 50,
                                                  std::size_t guard = Context::kDefaultGuardDigits) {
    std::vector<VerificationReport> reports;
    for (const auto& [id, point] : detail::verify_all_plan())
        reports.push_back(verify(id, VerifyOptions{digits, guard, point}));
    return reports;
}

inline std::vector<VerificationReport> verify_all(std::size_t digits, std::size_t guard,
                                                  const ArithFnTable& table) {
    std::vector<VerificationReport> reports;
    for (const auto& [id, point] : detail::verify_all_plan())
        reports.push_back(verify(id, VerifyOptions{digits, guard, point}, table));
    return reports;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace auric

#endif // AURIC_IDENTITIES_HPP
