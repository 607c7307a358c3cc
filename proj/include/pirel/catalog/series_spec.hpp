#pragma once

#include <string>

#include "pirel/catalog/closed_form.hpp"
#include "pirel/catalog/family.hpp"
#include "pirel/exact/poly.hpp"
#include "pirel/numerics/big_complex.hpp"

namespace pirel {

/// re + i·im with QuadExt parts.
struct ExactComplex {
    QuadExt re;
    QuadExt im;

    ExactComplex() = default;
    ExactComplex(QuadExt r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(QuadExt r, QuadExt i) : re(std::move(r)), im(std::move(i)) {}

    bool isReal() const noexcept { return im.isZero(); }
    std::string toString() const;
    friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

BigComplex complexNumeric(const ExactComplex& v, const PrecisionContext& ctx);

/// A series
///   sum_{n>=0} U(n)/div(n) · z0^n · [poly(n) P_{mn}(x) + polyPrev(n) P_{mn-1}(x)] = rhs
/// with m = legendreStride. Stride 0 drops the Legendre factor (and
/// polyPrev); polyPrev is only meaningful for stride 1.
struct SeriesSpec {
    std::string id;
    std::string title;
    TermFamily family;
    int legendreStride = 0;
    ExactComplex legendreArg;
    ExactComplex z0;
    PolyQ poly;
    PolyQ polyPrev;
    ClosedForm rhs;

    bool isComplex() const noexcept { return !legendreArg.isReal() || !z0.isReal(); }
    /// Structural checks: stride range, degree <= 3, family, rhs. Throws DomainError.
    void validate() const;

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// Exact n-th term (requires real rational x and z0 and a rational poly).
Rational exactTerm(const SeriesSpec& spec, long n);

/// Limit of |term(n+1)/term(n)|: |z0| · C · λ^m where λ = |x| + √(x²-1) for
/// real |x| > 1, the larger |x ± √(x²-1)| for complex x, and 1 otherwise.
/// Throws DivergenceError when the rate is not below 1.
BigReal convergenceRate(const SeriesSpec& spec, const PrecisionContext& ctx);
/// Same quantity as a double, without the divergence check.
double convergenceRateEstimate(const SeriesSpec& spec);

}  // namespace pirel
