#ifndef AURIC_ARITH_FUNCTIONS_HPP
#define AURIC_ARITH_FUNCTIONS_HPP

// Euler's totient and the Moebius function: linear-sieve tables for 1..N,
// independent brute-force oracles, and the divisor-sum identities
// sum_{d|n} phi(d) = n and sum_{d|n} mu(d) = [n == 1].
//
// Convention: phi(1) = 1 and mu(1) = 1 (the divisor-sum identities force
// both; a literal "count of m < n coprime to n" would give phi(1) = 0).

#include <algorithm>
#include <cstdint>
#include <new>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "auric/errors.hpp"

namespace auric {

// Immutable sieve output for 1..limit; index 0 is unused.  Safe for any
// number of concurrent readers.
class ArithFnTable {
public:
    ArithFnTable(std::uint32_t limit, std::vector<std::uint64_t> totient,
                 std::vector<std::int8_t> moebius, std::vector<std::uint32_t> smallest_prime_factor)
        : limit_(limit), totient_(std::move(totient)), moebius_(std::move(moebius)),
          spf_(std::move(smallest_prime_factor)) {
        if (limit_ == 0) throw DomainError("ArithFnTable: limit must be >= 1");
        if (totient_.size() != limit_ + 1u || moebius_.size() != limit_ + 1u || spf_.size() != limit_ + 1u)
            throw ContractViolation("ArithFnTable: array sizes do not match limit");
    }

    std::uint32_t limit() const { return limit_; }

    std::uint64_t totient(std::uint32_t n) const {
        check_range(n);
        return totient_[n];
    }

    int moebius(std::uint32_t n) const {
        check_range(n);
        return moebius_[n];
    }

    std::uint32_t smallest_prime_factor(std::uint32_t n) const {
        check_range(n);
        if (n < 2) throw DomainError("smallest_prime_factor: undefined for n < 2");
        return spf_[n];
    }

    // All positive divisors of n, ascending, enumerated through the
    // smallest-prime-factor factorization.
    std::vector<std::uint32_t> divisors(std::uint32_t n) const {
        check_range(n);
        std::vector<std::uint32_t> divs{1};
        while (n > 1) {
            const std::uint32_t p = spf_[n];
            std::uint32_t exponent = 0;
            while (n % p == 0) {
                n /= p;
                ++exponent;
            }
            const std::size_t base_count = divs.size();
            std::uint64_t pk = 1;
            for (std::uint32_t e = 1; e <= exponent; ++e) {
                pk *= p;
                for (std::size_t i = 0; i < base_count; ++i)
                    divs.push_back(static_cast<std::uint32_t>(divs[i] * pk));
            }
        }
        std::sort(divs.begin(), divs.end());
        return divs;
    }

private:
    void check_range(std::uint32_t n) const {
        if (n < 1 || n > limit_)
            throw DomainError("ArithFnTable: n = " + std::to_string(n) + " outside table range 1.." +
                              std::to_string(limit_));
    }

    std::uint32_t limit_;
    std::vector<std::uint64_t> totient_;
    std::vector<std::int8_t> moebius_;
    std::vector<std::uint32_t> spf_;
};

// Linear sieve: one pass fills smallest prime factors, phi and mu for all
// n <= limit in O(limit) arithmetic operations.
inline ArithFnTable sieve_build(std::uint32_t limit) {
    if (limit == 0) throw DomainError("sieve_build: limit must be >= 1");

    std::vector<std::uint64_t> phi;
    std::vector<std::int8_t> mu;
    std::vector<std::uint32_t> spf;
    std::vector<std::uint32_t> primes;
    try {
        phi.resize(limit + 1u);
        mu.resize(limit + 1u);
        spf.resize(limit + 1u);
        primes.reserve(limit > 16 ? limit / 8 : 4);
    } catch (const std::bad_alloc&) {
        const std::uint64_t bytes =
            static_cast<std::uint64_t>(limit + 1u) * (sizeof(std::uint64_t) + sizeof(std::int8_t) + sizeof(std::uint32_t));
        throw ResourceError("sieve_build: failed to allocate about " + std::to_string(bytes) +
                            " bytes for limit " + std::to_string(limit));
    }

    phi[1] = 1;
    mu[1] = 1;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = i;
            phi[i] = i - 1;
            mu[i] = -1;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || static_cast<std::uint64_t>(p) * i > limit) break;
            const std::uint32_t c = p * i;
            spf[c] = p;
            if (p == spf[i]) {
                phi[c] = phi[i] * p;
                mu[c] = 0;
                break;
            }
            phi[c] = phi[i] * (p - 1);
            mu[c] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return ArithFnTable(limit, std::move(phi), std::move(mu), std::move(spf));
}

// Oracle: counts m in 1..n with gcd(m, n) = 1.  (m = n contributes only at
// n = 1, which yields the phi(1) = 1 convention automatically.)
inline std::uint64_t brute_totient(std::uint32_t n) {
    if (n == 0) throw DomainError("brute_totient: n must be >= 1");
    std::uint64_t count = 0;
    for (std::uint32_t m = 1; m <= n; ++m)
        if (std::gcd(m, n) == 1) ++count;
    return count;
}

// Oracle: trial factorization; 0 on any squared prime factor, otherwise
// (-1)^(number of distinct prime factors).
inline int brute_moebius(std::uint32_t n) {
    if (n == 0) throw DomainError("brute_moebius: n must be >= 1");
    int factors = 0;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

// sum_{d|n} phi(d); equals n for every n (asserted by callers and tests).
inline std::uint64_t divisor_sum_totient(std::uint32_t n, const ArithFnTable& table) {
    std::uint64_t sum = 0;
    for (std::uint32_t d : table.divisors(n)) sum += table.totient(d);
    return sum;
}

// sum_{d|n} mu(d); equals 1 at n = 1 and 0 for n > 1.
inline std::int64_t divisor_sum_moebius(std::uint32_t n, const ArithFnTable& table) {
    std::int64_t sum = 0;
    for (std::uint32_t d : table.divisors(n)) sum += table.moebius(d);
    return sum;
}

// n * sum_{d|n} mu(d)/d evaluated exactly as sum_{d|n} mu(d) * (n/d);
// always an integer and always equal to phi(n).
inline std::uint64_t totient_via_moebius(std::uint32_t n, const ArithFnTable& table) {
    std::int64_t sum = 0;
    for (std::uint32_t d : table.divisors(n)) sum += static_cast<std::int64_t>(table.moebius(d)) * (n / d);
    if (sum < 0) throw ContractViolation("totient_via_moebius: negative result for n = " + std::to_string(n));
    return static_cast<std::uint64_t>(sum);
}

/// Weight accessor used by the series evaluator: phi(k) or mu(k) as a signed
// machine integer.
enum class Weight { totient, moebius };

inline std::int64_t weight_value(Weight w, std::uint32_t k, const ArithFnTable& table) {
    return w == Weight::totient ? static_cast<std::int64_t>(table.totient(k)) : table.moebius(k);
}

inline const char* weight_name(Weight w) {
    return w == Weight::totient ? "totient" : "moebius";
}

inline Weight weight_from_name(std::string_view name) {
    if (name == "totient") return Weight::totient;
    if (name == "moebius") return Weight::moebius;
    throw DomainError("unknown weight '" + std::string(name) + "'");
}

} // namespace auric

#endif // AURIC_ARITH_FUNCTIONS_HPP
