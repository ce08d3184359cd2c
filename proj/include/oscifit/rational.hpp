#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oscifit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision integer parts.
///
/// Canonical form is maintained after every operation: the denominator is
/// strictly positive and gcd(|numerator|, denominator) = 1. Backed by
/// boost::multiprecision::cpp_rational, which normalizes on construction
/// and after arithmetic; this wrapper pins the invariant into the API and
/// adds the conversions the series machinery needs.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {} // NOLINT: implicit by design (literals)
    Rational(const BigInt& n) : v_(n) {}

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        // cpp_rational's (num, den) constructor insists on a positive
        // denominator; fold the sign into the numerator first.
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    [[nodiscard]] double to_double() const { return v_.convert_to<double>(); }
    [[nodiscard]] long double to_long_double() const { return v_.convert_to<long double>(); }

    /// "p/q" for non-integers, plain "p" otherwise.
    [[nodiscard]] std::string str() const { return v_.str(); }

private:
    boost::multiprecision::cpp_rational v_;
};

} // namespace oscifit
