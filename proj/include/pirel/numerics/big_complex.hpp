#pragma once

#include <string>

#include "pirel/numerics/big_real.hpp"

namespace pirel {

/// Complex number over BigReal; both parts share one context.
class BigComplex {
public:
    BigComplex() = default;
    explicit BigComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}
    BigComplex(const PrecisionContext& ctx, long re) : re_(ctx, re), im_(ctx) {}
    explicit BigComplex(BigReal re);
    BigComplex(BigReal re, BigReal im);

    const PrecisionContext& context() const noexcept { return re_.context(); }
    const BigReal& re() const noexcept { return re_; }
    const BigReal& im() const noexcept { return im_; }

    BigComplex in(const PrecisionContext& ctx) const { return {re_.in(ctx), im_.in(ctx)}; }

    BigComplex& operator+=(const BigComplex& r);
    BigComplex& operator-=(const BigComplex& r);
    BigComplex& operator*=(const BigComplex& r);
    BigComplex& operator/=(const BigComplex& r);
    BigComplex& operator+=(const BigReal& r) { re_ += r; return *this; }
    BigComplex& operator-=(const BigReal& r) { re_ -= r; return *this; }
    BigComplex& operator*=(const BigReal& r);
    BigComplex& operator/=(const BigReal& r);
    BigComplex& operator+=(long r) { re_ += r; return *this; }
    BigComplex& operator-=(long r) { re_ -= r; return *this; }
    BigComplex& operator*=(long r);
    BigComplex& operator/=(long r);
    BigComplex operator-() const { return {-re_, -im_}; }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator+(BigComplex a, const BigReal& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigReal& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
    friend BigComplex operator*(const BigReal& a, BigComplex b) { return b *= a; }
    friend BigComplex operator+(BigComplex a, long b) { return a += b; }
    friend BigComplex operator-(BigComplex a, long b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
    friend BigComplex operator*(long a, BigComplex b) { return b *= a; }
    friend BigComplex operator+(long a, BigComplex b) { return b += a; }
    friend BigComplex operator-(long a, const BigComplex& b) { return -b + a; }
    friend BigComplex operator/(long a, const BigComplex& b) { return BigComplex(b.context(), a) / b; }

    bool isZero() const noexcept { return re_.isZero() && im_.isZero(); }
    std::string toString(int significant) const;

private:
    BigReal re_;
    BigReal im_;
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
/// Principal square root (branch cut on the negative real axis).
BigComplex sqrt(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm.
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long exponent);
/// Principal branch of z^(p/q).
BigComplex pow(const BigComplex& z, const Rational& exponent);

}  // namespace pirel
