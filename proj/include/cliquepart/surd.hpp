#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cliquepart/error.hpp"

namespace cliquepart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// Only used for reporting and for seeding exact floor/ceil searches.
using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    const BigInt s = isqrt(v);
    return s * s == v;
}

inline BigInt floor_rational(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

inline BigInt ceil_rational(const Rational& x) { return -floor_rational(-x); }

/// Exact element a + b*sqrt(d) of Q(sqrt d). When d is a perfect square the
/// value collapses to a rational with b = 0 and d kept for bookkeeping.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    explicit QuadraticSurd(Rational a, Rational b = 0, BigInt d = 0) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 0) throw Error(ErrorCode::BadParams, "surd radicand must be non-negative");
        if (is_perfect_square(d_) && b_ != 0) {
            a_ += b_ * Rational(isqrt(d_));
            b_ = 0;
        }
    }

    static QuadraticSurd rational(Rational a, BigInt d) { return QuadraticSurd(std::move(a), 0, std::move(d)); }

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const BigInt& d() const { return d_; }
    [[nodiscard]] bool is_rational() const { return b_ == 0; }

    /// Exact sign via a^2 versus b^2 d when a and b disagree in sign.
    [[nodiscard]] int sign() const {
        const int sa = a_.sign(), sb = b_.sign();
        if (sb == 0 || d_ == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

    [[nodiscard]] QuadraticSurd conjugate() const { return QuadraticSurd(a_, -b_, d_); }
    /// (a + b sqrt d)(a - b sqrt d)
    [[nodiscard]] Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
        const BigInt d = common(x, y);
        return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadraticSurd operator-(const QuadraticSurd& x) { return QuadraticSurd(-x.a_, -x.b_, x.d_); }
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
        const BigInt d = common(x, y);
        return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
        const Rational n = y.norm();
        if (n == 0) throw Error(ErrorCode::DivisionByZero, "surd division by zero");
        const QuadraticSurd top = x * y.conjugate();
        return QuadraticSurd(top.a_ / n, top.b_ / n, common(x, y));
    }
    friend QuadraticSurd operator+(const QuadraticSurd& x, const Rational& r) { return x + rational(r, x.d_); }
    friend QuadraticSurd operator-(const QuadraticSurd& x, const Rational& r) { return x + rational(-r, x.d_); }
    friend QuadraticSurd operator*(const QuadraticSurd& x, const Rational& r) { return QuadraticSurd(x.a_ * r, x.b_ * r, x.d_); }
    friend QuadraticSurd operator/(const QuadraticSurd& x, const Rational& r) {
        if (r == 0) throw Error(ErrorCode::DivisionByZero, "surd division by zero");
        return QuadraticSurd(x.a_ / r, x.b_ / r, x.d_);
    }
    friend QuadraticSurd operator/(const Rational& r, const QuadraticSurd& y) { return rational(r, y.d_) / y; }

    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() >= 0; }

    [[nodiscard]] Float200 to_float() const {
        return Float200(a_) + Float200(b_) * boost::multiprecision::sqrt(Float200(d_));
    }
    [[nodiscard]] double to_double() const { return static_cast<double>(to_float()); }

    /// Certified floor: a 200-bit estimate corrected by exact comparisons.
    [[nodiscard]] BigInt floor() const {
        if (is_rational()) return floor_rational(a_);
        BigInt k = static_cast<BigInt>(boost::multiprecision::floor(to_float()));
        while (*this < rational(Rational(k), d_)) k -= 1;
        while (*this >= rational(Rational(k + 1), d_)) k += 1;
        return k;
    }
    [[nodiscard]] BigInt ceil() const {
        const BigInt f = floor();
        return *this == rational(Rational(f), d_) ? f : f + 1;
    }

    [[nodiscard]] std::string to_string() const {
        if (is_rational()) return a_.str();
        return a_.str() + " + " + b_.str() + "*sqrt(" + d_.str() + ")";
    }

private:
    static BigInt common(const QuadraticSurd& x, const QuadraticSurd& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.d_ != 0 ? x.d_ : y.d_;
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw Error(ErrorCode::BadParams, "surds from different quadratic fields");
        return x.d_;
    }

    Rational a_ = 0;
    Rational b_ = 0;
    BigInt d_ = 0;
};

}  // namespace cliquepart
