#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pirel {

/// Exact signed integer of unbounded size (GMP).
class BigInt {
public:
    BigInt() = default;
    BigInt(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class value) : v_(std::move(value)) {}

    /// Decimal digits with optional leading sign; throws DomainError otherwise.
    static BigInt parse(std::string_view text);

    std::string toString() const { return v_.get_str(); }
    const mpz_class& mpz() const noexcept { return v_; }

    int sign() const noexcept { return sgn(v_); }
    bool isZero() const noexcept { return sign() == 0; }
    bool fitsLong() const noexcept { return v_.fits_slong_p(); }
    long toLong() const;
    /// Number of bits in |x|; 0 for zero.
    std::size_t bitLength() const noexcept;
    /// Approximate log10 |x|.
    double log10Abs() const noexcept;

    BigInt& operator+=(const BigInt& r) { v_ += r.v_; return *this; }
    BigInt& operator-=(const BigInt& r) { v_ -= r.v_; return *this; }
    BigInt& operator*=(const BigInt& r) { v_ *= r.v_; return *this; }
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class v_;
};

BigInt abs(const BigInt& x);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
/// Truncating quotient; the caller guarantees exactness where it matters.
BigInt exactQuotient(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);
bool isPerfectSquare(const BigInt& x);
BigInt isqrt(const BigInt& x);

/// Writes n = square² · core with core squarefree (n > 0).
/// Exact when every prime factor of n above 10^6 appears at most once, or
/// when n / (part below 10^6) is below 10^18.
struct SquarefreeSplit {
    BigInt square;
    BigInt core;
};
SquarefreeSplit squarefreeSplit(const BigInt& n);

}  // namespace pirel
