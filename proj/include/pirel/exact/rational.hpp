#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "pirel/exact/big_int.hpp"

namespace pirel {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : v_(value.mpz()) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class value);

    /// "p", "-p", or "p/q" with decimal integers.
    static Rational parse(std::string_view text);

    BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
    const mpq_class& mpq() const noexcept { return v_; }

    int sign() const noexcept { return sgn(v_); }
    bool isZero() const noexcept { return sign() == 0; }
    bool isInteger() const noexcept { return v_.get_den() == 1; }
    double toDouble() const noexcept { return v_.get_d(); }
    /// "p" or "p/q".
    std::string toString() const;

    Rational& operator+=(const Rational& r) { v_ += r.v_; return *this; }
    Rational& operator-=(const Rational& r) { v_ -= r.v_; return *this; }
    Rational& operator*=(const Rational& r) { v_ *= r.v_; return *this; }
    Rational& operator/=(const Rational& r);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, long exponent);
Rational inverse(const Rational& x);

}  // namespace pirel
