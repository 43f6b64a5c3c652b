#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "auric/arith_functions.hpp"

using auric::ArithFnTable;
using auric::ContractViolation;
using auric::DomainError;
using auric::Weight;

namespace {

// A copy of the sieve's arrays with one entry editable: the mutation hook
// used here and by the identity-level mutation tests.
ArithFnTable copy_with_moebius(const ArithFnTable& src, std::uint32_t n, std::int8_t value) {
    const std::uint32_t limit = src.limit();
    std::vector<std::uint64_t> phi(limit + 1u, 0);
    std::vector<std::int8_t> mu(limit + 1u, 0);
    std::vector<std::uint32_t> spf(limit + 1u, 0);
    for (std::uint32_t i = 1; i <= limit; ++i) {
        phi[i] = src.totient(i);
        mu[i] = static_cast<std::int8_t>(src.moebius(i));
        if (i >= 2) spf[i] = src.smallest_prime_factor(i);
    }
    mu[n] = value;
    return ArithFnTable(limit, std::move(phi), std::move(mu), std::move(spf));
}

} // namespace

TEST_CASE("sieve matches the published small tables") {
    const ArithFnTable t = auric::sieve_build(10);
    const std::uint64_t phi_expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
    const int mu_expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    for (std::uint32_t n = 1; n <= 10; ++n) {
        CHECK(t.totient(n) == phi_expected[n - 1]);
        CHECK(t.moebius(n) == mu_expected[n - 1]);
    }
}

TEST_CASE("sieve agrees with brute-force oracles") {
    const ArithFnTable t = auric::sieve_build(5000);
    for (std::uint32_t n = 1; n <= 2000; ++n)
        CHECK(t.totient(n) == auric::brute_totient(n));
    for (std::uint32_t n = 1; n <= 5000; ++n)
        CHECK(t.moebius(n) == auric::brute_moebius(n));
}

TEST_CASE("divisor sums realize the two arithmetic identities") {
    const ArithFnTable t = auric::sieve_build(2000);
    CHECK(auric::divisor_sum_moebius(1, t) == 1);
    for (std::uint32_t n = 1; n <= 2000; ++n) {
        CHECK(auric::divisor_sum_totient(n, t) == n);
        CHECK(auric::divisor_sum_moebius(n, t) == (n == 1 ? 1 : 0));
        CHECK(auric::totient_via_moebius(n, t) == t.totient(n));
    }
}

TEST_CASE("smallest prime factors and divisor enumeration") {
    const ArithFnTable t = auric::sieve_build(100);
    CHECK(t.smallest_prime_factor(12) == 2);
    CHECK(t.smallest_prime_factor(49) == 7);
    CHECK(t.smallest_prime_factor(97) == 97);
    CHECK_THROWS_AS(t.smallest_prime_factor(1), DomainError);

    CHECK(t.divisors(1) == std::vector<std::uint32_t>{1});
    CHECK(t.divisors(12) == std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12});
    CHECK(t.divisors(97) == std::vector<std::uint32_t>{1, 97});
    CHECK(t.divisors(64) == std::vector<std::uint32_t>{1, 2, 4, 8, 16, 32, 64});

    // Divisor lists are ascending and multiplicatively closed under n.
    for (std::uint32_t n : {30u, 36u, 60u, 96u, 100u}) {
        const auto divs = t.divisors(n);
        CHECK(std::is_sorted(divs.begin(), divs.end()));
        for (std::uint32_t d : divs) CHECK(n % d == 0);
    }
}

TEST_CASE("multiplicativity on coprime pairs up to 100") {
    const ArithFnTable t = auric::sieve_build(10000);
    for (std::uint32_t a = 1; a <= 100; ++a)
        for (std::uint32_t b = 1; b <= 100; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(t.totient(a * b) == t.totient(a) * t.totient(b));
            CHECK(t.moebius(a * b) == t.moebius(a) * t.moebius(b));
        }
}

TEST_CASE("prime and prime-power structure") {
    const ArithFnTable t = auric::sieve_build(1100);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 97u, 1009u}) {
        CHECK(t.totient(p) == p - 1);
        CHECK(t.moebius(p) == -1);
    }
    CHECK(t.totient(9) == 6);
    CHECK(t.totient(27) == 18);
    CHECK(t.totient(1024) == 512);
    CHECK(t.moebius(4) == 0);
    CHECK(t.moebius(1024) == 0);
    for (std::uint32_t n = 1; n <= 1100; ++n) {
        const int mu = t.moebius(n);
        CHECK(mu >= -1);
        CHECK(mu <= 1);
    }
}

TEST_CASE("table range checking") {
    const ArithFnTable t = auric::sieve_build(50);
    CHECK(t.limit() == 50);
    CHECK_THROWS_AS(t.totient(0), DomainError);
    CHECK_THROWS_AS(t.totient(51), DomainError);
    CHECK_THROWS_AS(t.moebius(0), DomainError);
    CHECK_THROWS_AS(t.divisors(51), DomainError);
    CHECK_THROWS_AS(auric::sieve_build(0), DomainError);
    CHECK_THROWS_AS(auric::brute_totient(0), DomainError);
    CHECK_THROWS_AS(auric::brute_moebius(0), DomainError);
}

TEST_CASE("weight helpers") {
    const ArithFnTable t = auric::sieve_build(10);
    CHECK(auric::weight_value(Weight::totient, 6, t) == 2);
    CHECK(auric::weight_value(Weight::moebius, 6, t) == 1);
    CHECK(auric::weight_value(Weight::moebius, 2, t) == -1);
    CHECK(auric::weight_name(Weight::totient) == std::string("totient"));
    CHECK(auric::weight_from_name("moebius") == Weight::moebius);
    CHECK_THROWS_AS(auric::weight_from_name("mangoldt"), DomainError);
}

TEST_CASE("mutated tables are constructible and visibly wrong") {
    const ArithFnTable clean = auric::sieve_build(60);
    const ArithFnTable mutated = copy_with_moebius(clean, 6, -1);
    CHECK(clean.moebius(6) == 1);
    CHECK(mutated.moebius(6) == -1);
    CHECK(mutated.totient(6) == clean.totient(6));
    // The Moebius divisor-sum identity breaks exactly where the flip lands.
    CHECK(auric::divisor_sum_moebius(6, mutated) == -2);
    CHECK(auric::divisor_sum_moebius(5, mutated) == 0);
    CHECK_THROWS_AS(ArithFnTable(3, {}, {}, {}), ContractViolation);
}
