#include "pirel/discovery/jet.hpp"

#include <algorithm>

#include "pirel/errors.hpp"

namespace pirel {

namespace {

BigComplex rationalC(const PrecisionContext& ctx, const Rational& r) {
    return BigComplex(BigReal(ctx, r));
}

}  // namespace

Jet::Jet(const BigComplex& c, int length) {
    if (length < 1) throw DomainError("jet length must be positive");
    c_.assign(length, BigComplex(c.context()));
    c_[0] = c;
}

Jet Jet::variable(const BigComplex& z0, int length) {
    Jet j(z0, length);
    if (length > 1) j.c_[1] = BigComplex(z0.context(), 1);
    return j;
}

BigComplex Jet::derivative(int k) const {
    BigComplex r = c_[k];
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

Jet& Jet::operator+=(const Jet& r) {
    c_.resize(std::min(c_.size(), r.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += r.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& r) {
    c_.resize(std::min(c_.size(), r.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= r.c_[i];
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.length(), b.length());
    Jet r(BigComplex(a.context()), n);
    for (int k = 0; k < n; ++k) {
        BigComplex s(a.context());
        for (int i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
        r.c_[k] = s;
    }
    return r;
}

Jet& Jet::operator*=(const Jet& r) { return *this = *this * r; }
Jet& Jet::operator/=(const Jet& r) { return *this = *this * inverse(r); }

Jet& Jet::operator*=(const BigComplex& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

Jet& Jet::operator*=(long r) {
    for (auto& c : c_) c *= r;
    return *this;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Jet operator+(Jet a, long b) {
    a.c_[0] += b;
    return a;
}

Jet inverse(const Jet& a) {
    if (a.value().isZero()) throw DomainError("jet inverse at zero");
    const int n = a.length();
    Jet r(1 / a.value(), n);
    for (int k = 1; k < n; ++k) {
        BigComplex s(a.context());
        for (int i = 1; i <= k; ++i) s += a[i] * r[k - i];
        r[k] = -s / a.value();
    }
    return r;
}

Jet pow(const Jet& a, const Rational& e) {
    if (a.value().isZero()) throw DomainError("jet power at zero");
    const auto& ctx = a.context();
    const int n = a.length();
    Jet r(pow(a.value(), e), n);
    // r' a = e a' r, coefficientwise.
    for (int k = 1; k < n; ++k) {
        BigComplex s(ctx);
        for (int j = 1; j <= k; ++j) {
            s += rationalC(ctx, e * Rational(j) - Rational(k - j)) * a[j] * r[k - j];
        }
        r[k] = s / (a.value() * k);
    }
    return r;
}

Jet sqrt(const Jet& a) {
    Jet r = pow(a, Rational(1, 2));
    r[0] = sqrt(a.value());
    return r;
}

Jet derivative(const Jet& a) {
    const int n = a.length();
    Jet r(BigComplex(a.context()), n);
    for (int k = 0; k + 1 < n; ++k) r[k] = a[k + 1] * (k + 1);
    return r;
}

}  // namespace pirel
