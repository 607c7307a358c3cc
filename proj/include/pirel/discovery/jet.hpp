#pragma once

#include <vector>

#include "pirel/exact/rational.hpp"
#include "pirel/numerics/big_complex.hpp"

namespace pirel {

/// Truncated Taylor expansion c_0 + c_1 h + ... + c_{N-1} h^{N-1} of an
/// analytic function about a base point. Arithmetic is truncated to the
/// shorter operand.
class Jet {
public:
    Jet() = default;
    /// The constant c.
    Jet(const BigComplex& c, int length);
    /// The identity function at base point z0.
    static Jet variable(const BigComplex& z0, int length);

    int length() const noexcept { return static_cast<int>(c_.size()); }
    const BigComplex& operator[](int k) const { return c_[k]; }
    BigComplex& operator[](int k) { return c_[k]; }
    const BigComplex& value() const { return c_[0]; }
    const PrecisionContext& context() const { return c_[0].context(); }
    /// k-th derivative at the base point, k! c_k.
    BigComplex derivative(int k) const;

    Jet& operator+=(const Jet& r);
    Jet& operator-=(const Jet& r);
    Jet& operator*=(const Jet& r);
    Jet& operator/=(const Jet& r);
    Jet& operator*=(const BigComplex& r);
    Jet& operator*=(long r);
    Jet operator-() const;

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator*(Jet a, const BigComplex& b) { return a *= b; }
    friend Jet operator*(Jet a, long b) { return a *= b; }
    friend Jet operator*(long a, Jet b) { return b *= a; }
    friend Jet operator+(Jet a, long b);
    friend Jet operator+(long a, Jet b) { return std::move(b) + a; }
    friend Jet operator-(long a, const Jet& b) { return -b + a; }
    friend Jet operator-(Jet a, long b) { return std::move(a) + (-b); }

private:
    std::vector<BigComplex> c_;
};

Jet inverse(const Jet& a);
/// a^e on the principal branch at the base point.
Jet pow(const Jet& a, const Rational& e);
Jet sqrt(const Jet& a);
/// Term-by-term derivative; the last coefficient becomes zero.
Jet derivative(const Jet& a);

}  // namespace pirel
