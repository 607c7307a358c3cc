#include "pirel/exact/quad_ext.hpp"

#include "pirel/errors.hpp"

namespace pirel {

QuadExt::QuadExt(Rational a, Rational b, const BigInt& d) : a_(std::move(a)) {
    if (d.sign() <= 0) throw DomainError("quadratic extension needs a positive radicand");
    if (b.isZero()) return;
    const SquarefreeSplit split = squarefreeSplit(d);
    b *= Rational(split.square);
    if (split.core == BigInt(1)) {
        a_ += b;
        return;
    }
    b_ = std::move(b);
    d_ = split.core;
}

QuadExt QuadExt::sqrtOf(const Rational& q) {
    if (q.sign() < 0) throw DomainError("square root of a negative rational");
    if (q.isZero()) return QuadExt();
    // √(n/m) = √(n m) / m.
    return QuadExt(Rational(0), Rational(BigInt(1), q.den()), q.num() * q.den());
}

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::conj() const {
    QuadExt r(*this);
    r.b_ = -r.b_;
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

const Rational& QuadExt::rational() const {
    if (!isRational()) throw DomainError("value is irrational: " + toString());
    return a_;
}

std::string QuadExt::toString() const {
    if (isRational()) return a_.toString();
    std::string surd = "sqrt(" + d_.toString() + ")";
    std::string bpart;
    if (b_ == Rational(1)) {
        bpart = surd;
    } else if (b_ == Rational(-1)) {
        bpart = "-" + surd;
    } else {
        bpart = b_.toString() + "*" + surd;
    }
    if (a_.isZero()) return bpart;
    if (bpart[0] != '-') bpart = "+" + bpart;
    return a_.toString() + bpart;
}

BigInt commonRadicand(const QuadExt& x, const QuadExt& y) {
    if (x.isRational()) return y.d();
    if (y.isRational()) return x.d();
    if (!(x.d() == y.d())) {
        throw MixedSurdError("cannot combine sqrt(" + x.d().toString() + ") with sqrt(" +
                             y.d().toString() + ")");
    }
    return x.d();
}

void QuadExt::adopt(const QuadExt& r) { d_ = commonRadicand(*this, r); }

QuadExt& QuadExt::operator+=(const QuadExt& r) {
    adopt(r);
    a_ += r.a_;
    b_ += r.b_;
    if (b_.isZero()) d_ = BigInt(1);
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& r) {
    adopt(r);
    a_ -= r.a_;
    b_ -= r.b_;
    if (b_.isZero()) d_ = BigInt(1);
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& r) {
    adopt(r);
    const Rational d(d_);
    Rational a = a_ * r.a_ + b_ * r.b_ * d;
    b_ = a_ * r.b_ + b_ * r.a_;
    a_ = std::move(a);
    if (b_.isZero()) d_ = BigInt(1);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& r) { return *this *= inverse(r); }

QuadExt QuadExt::operator-() const {
    QuadExt r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt inverse(const QuadExt& x) {
    if (x.isZero()) throw DomainError("division by zero in quadratic extension");
    const Rational n = x.norm();
    QuadExt c = x.conj();
    if (c.isRational()) return QuadExt(inverse(c.a()));
    return QuadExt(c.a() / n, c.b() / n, c.d());
}

QuadExt pow(const QuadExt& x, long exponent) {
    if (exponent < 0) return pow(inverse(x), -exponent);
    QuadExt result(1);
    QuadExt base = x;
    for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if ((e & 1U) != 0) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

BigReal surdNumeric(const QuadExt& v, const PrecisionContext& ctx) {
    BigReal r(ctx, v.a());
    if (!v.isRational()) r += BigReal(ctx, v.b()) * sqrt(BigReal(ctx, v.d()));
    return r;
}

}  // namespace pirel
