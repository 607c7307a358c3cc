#include "pirel/numerics/hypergeometric.hpp"

#include <algorithm>
#include <cmath>

#include "pirel/errors.hpp"

namespace pirel {

namespace {

constexpr long kMaxTerms = 10'000'000;

double magnitude(const BigReal& z) { return std::fabs(z.toDouble()); }
double magnitude(const BigComplex& z) { return abs(z).toDouble(); }
double logMagnitude(const BigReal& z) { return z.log10Abs(); }
double logMagnitude(const BigComplex& z) { return abs(z).log10Abs(); }

bool terminates(const std::vector<Rational>& a) {
    return std::any_of(a.begin(), a.end(),
                       [](const Rational& v) { return v.isInteger() && v.sign() <= 0; });
}

template <class T>
T sum(const std::vector<Rational>& a, const std::vector<Rational>& b, const T& z) {
    const PrecisionContext& ctx = z.context();
    const bool finite = terminates(a);
    const double zmag = magnitude(z);
    if (!finite) {
        if (a.size() > b.size() + 1) throw DomainError("pFq with p > q+1 diverges");
        if (a.size() == b.size() + 1 && zmag >= 1.0) {
            throw DomainError("pFq with p = q+1 needs |z| < 1");
        }
    }

    double largest = 1.0;
    for (const auto& v : a) largest = std::max(largest, std::fabs(v.toDouble()));
    for (const auto& v : b) largest = std::max(largest, std::fabs(v.toDouble()));
    const long settled = static_cast<long>(std::ceil(2.0 * largest)) + 2;

    const double target = -(ctx.digits() + ctx.guard() / 2.0);
    T total = z;
    total *= 0;
    total += 1;
    T term = total;
    double prevRatio = -1.0;
    int direction = 0;
    int monotoneRun = 0;
    for (long n = 0; n < kMaxTerms; ++n) {
        Rational ratio(1);
        for (const auto& v : a) ratio *= v + Rational(n);
        for (const auto& v : b) {
            const Rational d = v + Rational(n);
            if (d.isZero()) throw DomainError("pFq lower parameter hits a pole");
            ratio /= d;
        }
        ratio /= Rational(n + 1);
        if (ratio.isZero()) return total;

        term *= z;
        mpz_class num = ratio.mpq().get_num();
        mpz_class den = ratio.mpq().get_den();
        term *= BigReal(ctx, BigInt(num));
        term /= BigReal(ctx, BigInt(den));
        total += term;

        if (finite) continue;
        const double r = std::fabs(ratio.toDouble()) * zmag;
        if (prevRatio >= 0.0 && n >= settled) {
            const int step = (r > prevRatio) ? 1 : (r < prevRatio ? -1 : 0);
            if (step == 0 || direction == 0 || step == direction) {
                ++monotoneRun;
            } else {
                monotoneRun = 0;
            }
            if (step != 0) direction = step;
        }
        prevRatio = r;
        if (monotoneRun < 3) continue;
        // Future ratios stay below max(current, limit); the limit is |z| for
        // p = q+1 and 0 otherwise.
        const double limit = (a.size() == b.size() + 1) ? zmag : 0.0;
        const double bound = std::max(r, limit) * (1.0 + 1e-9);
        if (bound >= 1.0) continue;
        const double tail = logMagnitude(term) + std::log10(bound) - std::log10(1.0 - bound);
        if (tail < target) return total;
    }
    throw DivergenceError("pFq summation did not converge within the term cap");
}

}  // namespace

BigReal hypergeometric(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const BigReal& z) {
    return sum(a, b, z);
}

BigComplex hypergeometric(const std::vector<Rational>& a, const std::vector<Rational>& b,
                          const BigComplex& z) {
    return sum(a, b, z);
}

}  // namespace pirel
