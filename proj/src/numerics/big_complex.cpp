#include "pirel/numerics/big_complex.hpp"

#include "pirel/errors.hpp"
#include "pirel/exact/rational.hpp"

namespace pirel {

BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(re_.context()) {}

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
    if (!(re_.context() == im_.context())) throw PrecisionMismatch("complex parts differ in context");
}

BigComplex& BigComplex::operator+=(const BigComplex& r) {
    re_ += r.re_;
    im_ += r.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& r) {
    re_ -= r.re_;
    im_ -= r.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& r) {
    BigReal re = re_ * r.re_ - im_ * r.im_;
    im_ = re_ * r.im_ + im_ * r.re_;
    re_ = std::move(re);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& r) {
    if (r.isZero()) throw DomainError("complex division by zero");
    const BigReal den = r.re_ * r.re_ + r.im_ * r.im_;
    BigReal re = (re_ * r.re_ + im_ * r.im_) / den;
    im_ = (im_ * r.re_ - re_ * r.im_) / den;
    re_ = std::move(re);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& r) {
    re_ *= r;
    im_ *= r;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& r) {
    re_ /= r;
    im_ /= r;
    return *this;
}

BigComplex& BigComplex::operator*=(long r) {
    re_ *= r;
    im_ *= r;
    return *this;
}

BigComplex& BigComplex::operator/=(long r) {
    re_ /= r;
    im_ /= r;
    return *this;
}

std::string BigComplex::toString(int significant) const {
    std::string im = im_.toString(significant);
    if (im[0] != '-') im = "+" + im;
    return re_.toString(significant) + im + "i";
}

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigReal abs(const BigComplex& z) {
    BigReal r(z.context());
    mpfr_hypot(r.raw(), z.re().get(), z.im().get(), MPFR_RNDN);
    return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex sqrt(const BigComplex& z) {
    if (z.isZero()) return z;
    const BigReal m = abs(z);
    // Stable half-angle form: compute the larger component first.
    BigReal t = sqrt((m + abs(z.re())) / 2);
    if (z.re().sign() >= 0) return {t, z.im() / (t * 2)};
    BigReal u = z.im().sign() < 0 ? -t : t;
    return {abs(z.im()) / (t * 2), u};
}

BigComplex exp(const BigComplex& z) {
    const BigReal m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z) {
    if (z.isZero()) throw DomainError("logarithm of zero");
    return {log(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& z, long exponent) {
    if (exponent < 0) return 1 / pow(z, -exponent);
    BigComplex result(z.context(), 1);
    BigComplex base = z;
    for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if ((e & 1U) != 0) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

BigComplex pow(const BigComplex& z, const Rational& exponent) {
    if (exponent.isInteger()) return pow(z, exponent.num().toLong());
    if (z.isZero()) {
        if (exponent.sign() <= 0) throw DomainError("zero to a nonpositive power");
        return z;
    }
    const BigReal r = exponent.num().toLong() * log(abs(z)) / exponent.den().toLong();
    const BigReal theta = exponent.num().toLong() * arg(z) / exponent.den().toLong();
    const BigReal m = exp(r);
    return {m * cos(theta), m * sin(theta)};
}

}  // namespace pirel
