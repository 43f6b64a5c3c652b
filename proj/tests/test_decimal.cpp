#include <catch2/catch_amalgamated.hpp>

#include "auric/decimal.hpp"

#include "support/oracles.hpp"

using auric::BigInt;
using auric::Context;
using auric::ContractViolation;
using auric::Decimal;
using auric::DomainError;
using auric::ParseError;

TEST_CASE("pow10 basics") {
    CHECK(auric::pow10(0) == 1);
    CHECK(auric::pow10(1) == 10);
    CHECK(auric::pow10(30) == BigInt("1000000000000000000000000000000"));
}

TEST_CASE("decimal construction and rendering") {
    CHECK(Decimal(BigInt(0), 0).str() == "0");
    CHECK(Decimal(BigInt(0), 5).str() == "0.00000");
    CHECK(Decimal(BigInt(-325), 2).str() == "-3.25");
    CHECK(Decimal(BigInt(1), 4).str() == "0.0001");
    CHECK(Decimal::from_int(42, 3).str() == "42.000");
    CHECK(Decimal::from_int(-7, 0).str() == "-7");

    const Decimal d(BigInt(16180339), 7);
    CHECK(d.sign() == 1);
    CHECK(d.scale() == 7);
    CHECK(d.magnitude() == 16180339);
    CHECK_FALSE(d.is_zero());
    CHECK(d.negated().str() == "-1.6180339");
    CHECK(d.negated().abs().str() == "1.6180339");
    CHECK(Decimal(BigInt(0), 3).sign() == 0);
}

TEST_CASE("decimal parse round-trips") {
    for (const char* text : {"0", "1", "-1", "3.25", "-3.25", "0.0001", "42.000",
                             "1.6180339887498948", "123456789012345678901234567890.5"}) {
        const Decimal d = Decimal::parse(text);
        CHECK(d.str() == text);
        CHECK(Decimal::parse(d.str()) == d);
    }
    CHECK(Decimal::parse("+2.5").str() == "2.5");
    CHECK(Decimal::parse("007").str() == "7");
    CHECK(Decimal::parse(".5").str() == "0.5");
    CHECK(Decimal::parse("5.").str() == "5");
}

TEST_CASE("decimal parse rejects malformed input") {
    for (const char* text : {"", "-", "+", ".", "1..2", "1.2.3", "abc", "1e5", "1,5", " 1"}) {
        CHECK_THROWS_AS(Decimal::parse(text), ParseError);
    }
}

TEST_CASE("rescaling is exact up, truncating toward zero down") {
    const Decimal d = Decimal::parse("1.27");
    CHECK(d.rescaled(5).str() == "1.27000");
    CHECK(d.rescaled(5).rescaled(2) == d);
    CHECK(d.rescaled(1).str() == "1.2");
    CHECK(d.rescaled(0).str() == "1");
    CHECK(Decimal::parse("-1.27").rescaled(1).str() == "-1.2"); // toward zero, not floor
    CHECK(Decimal::parse("-0.9").rescaled(0).str() == "0");
}

TEST_CASE("comparisons require equal scales") {
    const Decimal a = Decimal::parse("1.50");
    const Decimal b = Decimal::parse("1.49");
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a >= a);
    CHECK(a != b);
    CHECK_THROWS_AS(a == Decimal::parse("1.5"), ContractViolation);
    CHECK_THROWS_AS(a < Decimal::parse("1.500"), ContractViolation);
}

TEST_CASE("context validates digit counts") {
    CHECK_THROWS_AS(Context(0), ContractViolation);
    CHECK_THROWS_AS(Context(10, 5), ContractViolation); // guard below minimum
    const Context ctx(10);
    CHECK(ctx.target_digits() == 10);
    CHECK(ctx.guard_digits() == Context::kDefaultGuardDigits);
    CHECK(ctx.working_digits() == 30);
    CHECK(ctx.scale_factor() == auric::pow10(30));
    CHECK(ctx.zero().is_zero());
    CHECK(ctx.one().str() == "1.000000000000000000000000000000");
    CHECK(ctx.ulp().units() == 1);
    CHECK(ctx.from_int(-3).units() == -3 * auric::pow10(30));
}

TEST_CASE("context text and ratio intake") {
    const Context ctx(5);
    CHECK(ctx.from_text("0.25").str() == "0.2500000000000000000000000");
    CHECK(ctx.from_text("1/4") == ctx.from_text("0.25"));
    CHECK(ctx.from_text("-7/2").str() == "-3.5000000000000000000000000");
    // 1/3 truncates: 25 threes.
    CHECK(ctx.from_text("1/3").str() == "0.3333333333333333333333333");
    // Literals longer than working precision truncate toward zero.
    CHECK(ctx.from_text("0.99999999999999999999999999") ==
          ctx.from_text("0.9999999999999999999999999"));
    CHECK_THROWS_AS(ctx.from_text("1.5/2"), ParseError);
    CHECK_THROWS_AS(ctx.from_text("1/0"), ParseError);
    CHECK_THROWS_AS(ctx.from_ratio(BigInt(1), BigInt(0)), DomainError);
    CHECK(ctx.from_ratio(BigInt(-1), BigInt(3)).str() == "-0.3333333333333333333333333");
}

TEST_CASE("fixed-point arithmetic obeys its stated error bounds") {
    const Context ctx(10);
    const Decimal a = ctx.from_text("2.5");
    const Decimal b = ctx.from_text("1.2");

    SECTION("add and sub are exact") {
        CHECK(auric::fx_add(a, b, ctx) == ctx.from_text("3.7"));
        CHECK(auric::fx_sub(a, b, ctx) == ctx.from_text("1.3"));
        CHECK(auric::fx_sub(b, a, ctx) == ctx.from_text("-1.3"));
    }

    SECTION("mul truncates toward zero") {
        CHECK(auric::fx_mul(a, b, ctx) == ctx.from_text("3"));
        const Decimal third = ctx.from_text("1/3");
        const Decimal product = auric::fx_mul(third, third, ctx);
        const Decimal ninth = ctx.from_text("1/9");
        // |(1/3)_repr^2 - 1/9| < 1 ulp and the product truncates once more.
        CHECK(oracle::units_diff(product, ninth) <= 1);
        const Decimal neg = auric::fx_mul(third.negated(), third, ctx);
        CHECK(neg == product.negated()); // symmetric truncation toward zero
    }

    SECTION("div truncates toward zero and rejects zero divisors") {
        CHECK(auric::fx_div(a, b, ctx) == ctx.from_ratio(BigInt(25), BigInt(12)));
        CHECK_THROWS_AS(auric::fx_div(a, ctx.zero(), ctx), DomainError);
        const Decimal q = auric::fx_div(ctx.one(), ctx.from_text("7"), ctx);
        CHECK(q == ctx.from_ratio(BigInt(1), BigInt(7)));
    }

    SECTION("integer helpers") {
        CHECK(auric::fx_mul_int(b, -3) == ctx.from_text("-3.6"));
        CHECK(auric::fx_div_int(a, 2) == ctx.from_text("1.25"));
        CHECK(auric::fx_div_int(ctx.from_text("-1"), 3) ==
              ctx.from_ratio(BigInt(-1), BigInt(3)));
        CHECK_THROWS_AS(auric::fx_div_int(a, 0), DomainError);
    }

    SECTION("scale mismatches are contract violations") {
        const Context other(12);
        CHECK_THROWS_AS(auric::fx_add(a, other.one(), ctx), ContractViolation);
        CHECK_THROWS_AS(auric::fx_mul(other.one(), other.one(), ctx), ContractViolation);
    }
}

TEST_CASE("matched_digits counts agreement in ulp terms") {
    const Context ctx(10); // working scale 30
    const Decimal a = ctx.from_text("1.5");
    CHECK(auric::matched_digits(a, a) == 30);
    CHECK(auric::matched_digits(a, auric::fx_add(a, ctx.ulp(), ctx)) == 29);
    const Decimal off = ctx.from_units(a.units() + auric::pow10(10)); // differs at digit 20
    CHECK(auric::matched_digits(a, off) == 19);
    CHECK(auric::matched_digits(a, ctx.from_text("2.5")) == 0);
    CHECK(auric::matched_digits(a, ctx.from_text("99")) == 0);
    CHECK_THROWS_AS(auric::matched_digits(a, Decimal::parse("1.5")), ContractViolation);
}
