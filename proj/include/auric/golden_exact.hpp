#ifndef AURIC_GOLDEN_EXACT_HPP
#define AURIC_GOLDEN_EXACT_HPP

// Exact arithmetic in Q(phi), elements a + b*phi with rational a, b and the
// reduction phi^2 = phi + 1.  Used to check closed-form simplification
// chains (e.g. (1/phi)/(1 - 1/phi) = phi) with no numerics involved.

#include <string>

#include "auric/errors.hpp"
#include "auric/rational_series.hpp"

namespace auric {

class GoldenExact {
public:
    GoldenExact() = default;
    GoldenExact(Rational rational_part, Rational phi_part)
        : a_(std::move(rational_part)), b_(std::move(phi_part)) {}

    static GoldenExact from_int(std::int64_t n) { return GoldenExact(Rational(n), Rational(0)); }
    static GoldenExact phi() { return GoldenExact(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& phi_part() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend GoldenExact operator+(const GoldenExact& x, const GoldenExact& y) {
        return GoldenExact(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend GoldenExact operator-(const GoldenExact& x, const GoldenExact& y) {
        return GoldenExact(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend GoldenExact operator*(const GoldenExact& x, const GoldenExact& y) {
        // (a + b*phi)(c + d*phi) with phi^2 = phi + 1.
        return GoldenExact(x.a_ * y.a_ + x.b_ * y.b_,
                           x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_);
    }

    // (a + b*phi)^-1 = ((a + b) - b*phi) / (a^2 + ab - b^2); the norm
    // vanishes only at zero because phi is irrational.
    GoldenExact inverse() const {
        const Rational norm = a_ * a_ + a_ * b_ - b_ * b_;
        if (norm == 0) throw DomainError("GoldenExact: inverse of zero");
        return GoldenExact((a_ + b_) / norm, -b_ / norm);
    }

    friend GoldenExact operator/(const GoldenExact& x, const GoldenExact& y) {
        return x * y.inverse();
    }

    friend bool operator==(const GoldenExact& x, const GoldenExact& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenExact& x, const GoldenExact& y) { return !(x == y); }

    std::string str() const {
        return a_.str() + " + " + b_.str() + "*phi";
    }

private:
    Rational a_;
    Rational b_;
};

} // namespace auric

#endif // AURIC_GOLDEN_EXACT_HPP
