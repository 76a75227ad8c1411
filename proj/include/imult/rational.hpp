#ifndef IMULT_RATIONAL_HPP
#define IMULT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "imult/errors.hpp"

namespace imult {

using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    explicit Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw math_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "num" or "num/den" (optional leading '-').
    static Rational from_string(const std::string& text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw math_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw math_error("rational division by zero");
        return Rational(mpq_class(1 / q_));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "3", "-3/2", "0"
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

}  // namespace imult

#endif
