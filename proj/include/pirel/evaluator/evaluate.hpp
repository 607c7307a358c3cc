#pragma once

#include "pirel/catalog/series_spec.hpp"
#include "pirel/numerics/big_complex.hpp"

namespace pirel {

/// Sum of a series together with the context it was computed in.
///
/// The working context is `ctx` widened by the decimal magnitude of the
/// largest term, so the absolute error stays below 10^-(digits + guard/2)
/// even when early terms are huge.
struct SeriesSum {
    BigComplex value;  // imaginary part is exactly zero for real specs
    bool isComplex = false;
    long termsUsed = 0;

    const PrecisionContext& context() const noexcept { return value.context(); }
};

/// Throws DivergenceError when the rate is not below 1 or the tail cannot
/// be certified within 10^6 terms.
SeriesSum sumSeries(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Real specs only (DomainError otherwise); rounded into ctx.
BigReal evalSeries(const SeriesSpec& spec, const PrecisionContext& ctx);
/// Any spec; rounded into ctx.
BigComplex evalSeriesComplex(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Term n as a BigComplex in ctx (real specs have zero imaginary part).
BigComplex seriesTerm(const SeriesSpec& spec, long n, const PrecisionContext& ctx);

/// Growth rate of |term(n)| fitted over [from, to]: least squares of the
/// block maxima of log|term| against n and log n, so polynomial factors
/// and the oscillation of P_n on [-1, 1] do not bias the slope.
double empiricalRate(const SeriesSpec& spec, long from = 200, long to = 600);

}  // namespace pirel
