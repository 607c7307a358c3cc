#pragma once

#include <string>

#include "pirel/exact/big_int.hpp"
#include "pirel/exact/rational.hpp"
#include "pirel/numerics/big_real.hpp"

namespace pirel {

/// a + b√d with rational a, b and squarefree d > 1, or a plain rational
/// (b = 0, d = 1). Arithmetic between two irrational values needs equal d;
/// a rational operand adopts the other side's d.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    /// a + b√d for any positive integer d; square factors of d move into b.
    QuadExt(Rational a, Rational b, const BigInt& d);

    /// √q for rational q >= 0, as an element of Q(√core(q)).
    static QuadExt sqrtOf(const Rational& q);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const BigInt& d() const noexcept { return d_; }

    bool isRational() const noexcept { return b_.isZero(); }
    bool isZero() const noexcept { return a_.isZero() && b_.isZero(); }
    /// Exact sign of the real number a + b√d.
    int sign() const;
    /// a - b√d.
    QuadExt conj() const;
    /// a^2 - b^2 d.
    Rational norm() const;
    /// Value as a rational; throws DomainError when irrational.
    const Rational& rational() const;

    /// "3", "1/2*sqrt(2)", "3+2*sqrt(2)".
    std::string toString() const;

    QuadExt& operator+=(const QuadExt& r);
    QuadExt& operator-=(const QuadExt& r);
    QuadExt& operator*=(const QuadExt& r);
    QuadExt& operator/=(const QuadExt& r);
    QuadExt operator-() const;

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.isZero() || x.d_ == y.d_);
    }

private:
    void adopt(const QuadExt& r);

    Rational a_;
    Rational b_;
    BigInt d_{1};
};

QuadExt inverse(const QuadExt& x);
QuadExt pow(const QuadExt& x, long exponent);
/// Common radicand of the irrational operands (1 if none); throws MixedSurdError.
BigInt commonRadicand(const QuadExt& x, const QuadExt& y);

/// a + b√d to context precision.
BigReal surdNumeric(const QuadExt& v, const PrecisionContext& ctx);

}  // namespace pirel
