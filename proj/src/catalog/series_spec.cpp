#include "pirel/catalog/series_spec.hpp"

#include "pirel/errors.hpp"
#include "pirel/numerics/legendre.hpp"

namespace pirel {

std::string ExactComplex::toString() const {
    if (isReal()) return re.toString();
    std::string i = im.toString();
    if (!im.isRational() && !im.a().isZero()) i = "(" + i + ")";
    if (re.isZero()) return i + "*i";
    return re.toString() + (i[0] == '-' ? "" : "+") + i + "*i";
}

BigComplex complexNumeric(const ExactComplex& v, const PrecisionContext& ctx) {
    return {surdNumeric(v.re, ctx), surdNumeric(v.im, ctx)};
}

void SeriesSpec::validate() const {
    if (id.empty()) throw DomainError("series needs an id");
    if (legendreStride < 0 || legendreStride > 3) {
        throw DomainError(id + ": Legendre stride must be 0..3");
    }
    if (poly.degree() > 3 || polyPrev.degree() > 3) {
        throw DomainError(id + ": polynomial degree exceeds 3");
    }
    if (!polyPrev.isZero() && legendreStride != 1) {
        throw DomainError(id + ": a P_(n-1) polynomial needs stride 1");
    }
    if (legendreStride == 0 && !(legendreArg == ExactComplex())) {
        throw DomainError(id + ": Legendre argument given without a Legendre factor");
    }
    if (z0.re.isZero() && z0.im.isZero()) throw DomainError(id + ": z0 must be nonzero");
    family.validate();
    rhs.validate();
}

Rational exactTerm(const SeriesSpec& spec, long n) {
    if (spec.isComplex()) throw DomainError(spec.id + ": exact terms need real parameters");
    const Rational z = spec.z0.re.rational();
    Rational value = spec.family.exactTerm(n) * pow(z, n);
    Rational bracket(0);
    if (spec.legendreStride == 0) {
        bracket = qeval(spec.poly, Rational(n)).rational();
    } else {
        const Rational x = spec.legendreArg.re.rational();
        const long m = spec.legendreStride * n;
        bracket = qeval(spec.poly, Rational(n)).rational() * legendreP(m, x);
        if (!spec.polyPrev.isZero()) {
            const Rational back = m == 0 ? Rational(1) : legendreP(m - 1, x);
            bracket += qeval(spec.polyPrev, Rational(n)).rational() * back;
        }
    }
    return value * bracket;
}

namespace {

BigReal legendreGrowth(const BigReal& x, const PrecisionContext& ctx) {
    const BigReal ax = abs(x);
    if (ax <= 1) return BigReal(ctx, 1);
    return ax + sqrt(ax * ax - 1);
}

BigReal legendreGrowth(const BigComplex& x, const PrecisionContext& ctx) {
    const BigComplex r = sqrt(x * x - 1);
    return max(abs(x + r), max(abs(x - r), BigReal(ctx, 1)));
}

BigReal rateValue(const SeriesSpec& spec, const PrecisionContext& ctx) {
    BigReal rate = abs(complexNumeric(spec.z0, ctx)) * BigReal(ctx, spec.family.scale());
    if (spec.legendreStride > 0) {
        const BigReal lambda = spec.legendreArg.isReal()
                                   ? legendreGrowth(surdNumeric(spec.legendreArg.re, ctx), ctx)
                                   : legendreGrowth(complexNumeric(spec.legendreArg, ctx), ctx);
        rate *= pow(lambda, static_cast<long>(spec.legendreStride));
    }
    return rate;
}

}  // namespace

BigReal convergenceRate(const SeriesSpec& spec, const PrecisionContext& ctx) {
    BigReal rate = rateValue(spec, ctx);
    if (rate >= 1) {
        throw DivergenceError(spec.id + ": convergence rate " + rate.toString(6) +
                              " is not below 1");
    }
    return rate;
}

double convergenceRateEstimate(const SeriesSpec& spec) {
    return rateValue(spec, PrecisionContext(30)).toDouble();
}

}  // namespace pirel
