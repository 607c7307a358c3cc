#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pirel/exact/quad_ext.hpp"

namespace pirel {

/// Polynomial with QuadExt coefficients, constant term first, trailing
/// zeros trimmed (the zero polynomial has no coefficients).
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<QuadExt> coefficients);
    PolyQ(std::initializer_list<QuadExt> coefficients)
        : PolyQ(std::vector<QuadExt>(coefficients)) {}

    const std::vector<QuadExt>& coefficients() const noexcept { return c_; }
    /// Coefficient of n^i (zero past the degree).
    QuadExt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QuadExt(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const noexcept { return c_.empty(); }
    /// True when every coefficient is rational.
    bool isRational() const;

    PolyQ& operator+=(const PolyQ& r);
    PolyQ& operator-=(const PolyQ& r);
    PolyQ& operator*=(const PolyQ& r);
    PolyQ& operator*=(const QuadExt& r);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
    friend PolyQ operator*(PolyQ a, const QuadExt& b) { return a *= b; }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    /// e.g. "14-171*n-4452*n^2+2116*n^3" in the variable `var`.
    std::string toString(const std::string& var = "n") const;

private:
    void trim();

    std::vector<QuadExt> c_;
};

/// Exact Horner evaluation.
QuadExt qeval(const PolyQ& p, const Rational& k);
QuadExt qeval(const PolyQ& p, const QuadExt& k);

}  // namespace pirel
