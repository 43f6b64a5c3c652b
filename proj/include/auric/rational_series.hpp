#ifndef AURIC_RATIONAL_SERIES_HPP
#define AURIC_RATIONAL_SERIES_HPP

// Exact power-series expansion of sum_k w(k)/k * sum_i x^{ki}/i truncated
// at degree N, with an independent divisor-sum route for every coefficient.
// All arithmetic is exact rational; comparing the two routes coefficient by
// coefficient is the formal counterpart of the numeric identity checks.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "auric/arith_functions.hpp"
#include "auric/errors.hpp"

namespace auric {

using Rational = boost::multiprecision::cpp_rational; // always lowest terms, den > 0

class TruncatedRationalSeries {
public:
    // coeffs[i] is the coefficient of x^(i+1); no constant term exists.
    TruncatedRationalSeries(std::size_t degree, std::vector<Rational> coeffs)
        : degree_(degree), coeffs_(std::move(coeffs)) {
        if (degree_ == 0) throw ContractViolation("series degree must be >= 1");
        if (coeffs_.size() != degree_)
            throw ContractViolation("series needs exactly " + std::to_string(degree_) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }

    std::size_t degree() const { return degree_; }

    const Rational& coeff(std::size_t n) const {
        if (n == 0 || n > degree_)
            throw DomainError("coefficient index " + std::to_string(n) + " outside 1.." +
                              std::to_string(degree_));
        return coeffs_[n - 1];
    }

private:
    std::size_t degree_;
    std::vector<Rational> coeffs_;
};

namespace detail {

inline void require_table_degree(const ArithFnTable& table, std::size_t degree) {
    if (degree == 0) throw DomainError("series degree must be >= 1");
    if (table.limit() < degree)
        throw ContractViolation("arithmetic table covers 1.." + std::to_string(table.limit()) +
                                " but degree " + std::to_string(degree) + " was requested");
}

} // namespace detail

// Truncated expansion of sum_{k<=N} w(k)/k * sum_{i<=N/k} x^{ki}/i.
// Dropping degrees above N cannot disturb the retained coefficients, so
// every retained coefficient is exact.
inline TruncatedRationalSeries expand_double_sum(Weight weight, std::size_t degree,
                                                 const ArithFnTable& table) {
    detail::require_table_degree(table, degree);
    std::vector<Rational> coeffs(degree, Rational(0));
    for (std::size_t k = 1; k <= degree; ++k) {
        const std::int64_t wk = weight_value(weight, static_cast<std::uint32_t>(k), table);
        if (wk == 0) continue;
        const Rational wk_over_k(wk, k);
        for (std::size_t i = 1; k * i <= degree; ++i)
            coeffs[k * i - 1] += wk_over_k / i;
    }
    return TruncatedRationalSeries(degree, std::move(coeffs));
}

// Coefficient n from the divisor-sum route: (sum_{d|n} w(d)) / n.
inline TruncatedRationalSeries expected_coefficients(Weight weight, std::size_t degree,
                                                     const ArithFnTable& table) {
    detail::require_table_degree(table, degree);
    std::vector<Rational> coeffs;
    coeffs.reserve(degree);
    for (std::size_t n = 1; n <= degree; ++n) {
        const auto nn = static_cast<std::uint32_t>(n);
        std::int64_t sum;
        if (weight == Weight::totient)
            sum = static_cast<std::int64_t>(divisor_sum_totient(nn, table));
        else
            sum = divisor_sum_moebius(nn, table);
        coeffs.emplace_back(sum, n);
    }
    return TruncatedRationalSeries(degree, std::move(coeffs));
}

// Positions n where the two series disagree; empty means identical.
inline std::vector<std::size_t> compare_series(const TruncatedRationalSeries& a,
                                               const TruncatedRationalSeries& b) {
    if (a.degree() != b.degree())
        throw ContractViolation("cannot compare series of degrees " +
                                std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()));
    std::vector<std::size_t> mismatches;
    for (std::size_t n = 1; n <= a.degree(); ++n)
        if (a.coeff(n) != b.coeff(n)) mismatches.push_back(n);
    return mismatches;
}

} // namespace auric

#endif // AURIC_RATIONAL_SERIES_HPP
