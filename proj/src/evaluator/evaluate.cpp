#include "pirel/evaluator/evaluate.hpp"

#include <cmath>
#include <type_traits>

#include "pirel/errors.hpp"

namespace pirel {

namespace {

constexpr long kTermCap = 1'000'000;
constexpr int kCertifySteps = 10;

// Upper bound g with |P_k(x)| <= g^k for all k (Laplace integral).
BigReal legendreBound(const SeriesSpec& spec, const PrecisionContext& ctx) {
    if (spec.legendreStride == 0) return BigReal(ctx, 1);
    if (spec.legendreArg.isReal()) {
        const BigReal x = abs(surdNumeric(spec.legendreArg.re, ctx));
        if (x <= 1) return BigReal(ctx, 1);
        return x + sqrt(x * x - 1);
    }
    const BigComplex x = complexNumeric(spec.legendreArg, ctx);
    return abs(x) + abs(sqrt(x * x - 1));
}

std::vector<BigReal> numericPoly(const PolyQ& p, const PrecisionContext& ctx) {
    std::vector<BigReal> out;
    for (const auto& c : p.coefficients()) out.push_back(surdNumeric(c, ctx));
    return out;
}

BigReal horner(const std::vector<BigReal>& c, long n, const PrecisionContext& ctx) {
    BigReal v(ctx);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v *= n;
        v += *it;
    }
    return v;
}

// Exact ratio U(n+1)/U(n) of the family factor, without the divisor.
Rational familyRatio(const TermFamily& f, const std::vector<Rational>& up,
                     const std::vector<Rational>& lo, long n) {
    Rational r = f.scale();
    const Rational nn(n);
    for (const auto& a : up) r *= a + nn;
    for (const auto& b : lo) r /= b + nn;
    return r;
}

// Non-oscillating majorant of |term(n)|:
//   |U(n)/div(n)| (|p(n)| + |pp(n)|) (|z0| g^m)^n.
// The iterator walks it forward and reports log10 values.
class Envelope {
public:
    Envelope(const SeriesSpec& spec, const PrecisionContext& ctx)
        : spec_(spec),
          ctx_(ctx),
          up_(spec.family.upper()),
          lo_(spec.family.lower()),
          p_(numericPoly(spec.poly, ctx)),
          pp_(numericPoly(spec.polyPrev, ctx)),
          u_(ctx, 1),
          geo_(ctx, 1) {
        step_ = abs(complexNumeric(spec.z0, ctx)) *
                pow(legendreBound(spec, ctx), static_cast<long>(spec.legendreStride));
        limit_ = (step_ * BigReal(ctx, spec.family.scale())).toDouble();
    }

    // log10 of the majorant at the current n.
    double log10Value() const {
        BigReal poly = abs(horner(p_, n_, ctx_)) + abs(horner(pp_, n_, ctx_));
        BigReal v = abs(u_) / BigReal(ctx_, spec_.family.divisorAt(n_)) * poly * geo_;
        return v.log10Abs();
    }

    void advance() {
        u_ *= BigReal(ctx_, familyRatio(spec_.family, up_, lo_, n_));
        geo_ *= step_;
        ++n_;
    }

    long n() const noexcept { return n_; }
    // Limit of the majorant's consecutive ratio.
    double limitRatio() const noexcept { return limit_; }

private:
    const SeriesSpec& spec_;
    PrecisionContext ctx_;
    std::vector<Rational> up_;
    std::vector<Rational> lo_;
    std::vector<BigReal> p_;
    std::vector<BigReal> pp_;
    BigReal u_;
    BigReal geo_;
    BigReal step_;
    double limit_ = 0;
    long n_ = 0;
};

// Watches the majorant's ratios and certifies a geometric tail bound once
// they have moved monotonically for kCertifySteps steps.
class TailCertifier {
public:
    explicit TailCertifier(double limit) : limit_(limit) {}

    // Feed log10 of the majorant at successive n; returns log10 of a bound
    // on the sum of all later majorant values, or nullopt if not certified.
    std::optional<double> feed(double logValue) {
        std::optional<double> out;
        if (std::isfinite(logValue) && std::isfinite(last_)) {
            const double ratio = std::pow(10.0, logValue - last_);
            const int dir = ratio > lastRatio_ ? 1 : (ratio < lastRatio_ ? -1 : 0);
            if (lastRatio_ >= 0 && (dir == 0 || dir == direction_)) {
                ++steady_;
            } else {
                steady_ = 0;
            }
            direction_ = dir;
            lastRatio_ = ratio;
            const double bound = std::max(ratio, limit_) * (1 + 1e-9);
            if (steady_ >= kCertifySteps && bound < 1) {
                out = logValue + std::log10(bound) - std::log10(1 - bound);
            }
        } else {
            steady_ = 0;
            lastRatio_ = -1;
        }
        last_ = logValue;
        return out;
    }

private:
    double limit_;
    double last_ = -INFINITY;
    double lastRatio_ = -1;
    int direction_ = 0;
    int steady_ = 0;
};

// Decimal exponent of the largest majorant value, from a cheap pass.
double peakMagnitude(const SeriesSpec& spec) {
    const PrecisionContext low(30);
    Envelope env(spec, low);
    TailCertifier cert(env.limitRatio());
    double peak = -INFINITY;
    for (; env.n() < kTermCap; env.advance()) {
        const double v = env.log10Value();
        peak = std::max(peak, v);
        auto tail = cert.feed(v);
        if (tail && *tail < peak - 30) break;
    }
    return peak;
}

bool zeroPolys(const SeriesSpec& spec) { return spec.poly.isZero() && spec.polyPrev.isZero(); }

template <typename T>
T makeArg(const ExactComplex& v, const PrecisionContext& ctx) {
    if constexpr (std::is_same_v<T, BigReal>) {
        return surdNumeric(v.re, ctx);
    } else {
        return complexNumeric(v, ctx);
    }
}

template <typename T>
T one(const PrecisionContext& ctx) {
    if constexpr (std::is_same_v<T, BigReal>) {
        return BigReal(ctx, 1);
    } else {
        return BigComplex(ctx, 1);
    }
}

// Streams the terms of a series in a fixed context.
template <typename T>
class TermStream {
public:
    TermStream(const SeriesSpec& spec, const PrecisionContext& ctx)
        : spec_(spec),
          ctx_(ctx),
          up_(spec.family.upper()),
          lo_(spec.family.lower()),
          p_(numericPoly(spec.poly, ctx)),
          pp_(numericPoly(spec.polyPrev, ctx)),
          u_(ctx, 1),
          zpow_(one<T>(ctx)),
          z0_(makeArg<T>(spec.z0, ctx)),
          x_(makeArg<T>(spec.legendreArg, ctx)),
          pk_(one<T>(ctx)),
          pkPrev_(one<T>(ctx)) {}

    T current() const {
        const BigReal scale = u_ / BigReal(ctx_, spec_.family.divisorAt(n_));
        if (spec_.legendreStride == 0) return zpow_ * (scale * horner(p_, n_, ctx_));
        T bracket = pk_ * horner(p_, n_, ctx_);
        if (!pp_.empty()) bracket += pkPrev_ * horner(pp_, n_, ctx_);
        return zpow_ * scale * bracket;
    }

    void advance() {
        u_ *= BigReal(ctx_, familyRatio(spec_.family, up_, lo_, n_));
        zpow_ *= z0_;
        for (int i = 0; i < spec_.legendreStride; ++i) {
            // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}; P_{-1} is never read at k = 0.
            T next = (x_ * pk_ * (2 * k_ + 1) - pkPrev_ * k_) / (k_ + 1);
            pkPrev_ = std::move(pk_);
            pk_ = std::move(next);
            ++k_;
        }
        ++n_;
    }

    long n() const noexcept { return n_; }

private:
    const SeriesSpec& spec_;
    PrecisionContext ctx_;
    std::vector<Rational> up_;
    std::vector<Rational> lo_;
    std::vector<BigReal> p_;
    std::vector<BigReal> pp_;
    BigReal u_;
    T zpow_;
    T z0_;
    T x_;
    T pk_;
    T pkPrev_;
    long k_ = 0;
    long n_ = 0;
};

template <typename T>
SeriesSum sumWith(const SeriesSpec& spec, const PrecisionContext& ctx,
                  const PrecisionContext& work) {
    const double target = -(ctx.digits() + ctx.guard() / 2.0);
    TermStream<T> terms(spec, work);
    Envelope env(spec, work);
    TailCertifier cert(env.limitRatio());
    T sum = one<T>(work) * 0L;
    for (; terms.n() < kTermCap; terms.advance(), env.advance()) {
        sum += terms.current();
        auto tail = cert.feed(env.log10Value());
        if (tail && *tail < target) {
            SeriesSum out;
            if constexpr (std::is_same_v<T, BigReal>) {
                out.value = BigComplex(sum, BigReal(work));
            } else {
                out.value = sum;
                out.isComplex = true;
            }
            out.termsUsed = terms.n() + 1;
            return out;
        }
    }
    throw DivergenceError(spec.id + ": tail bound not certified within " +
                          std::to_string(kTermCap) + " terms");
}

}  // namespace

SeriesSum sumSeries(const SeriesSpec& spec, const PrecisionContext& ctx) {
    convergenceRate(spec, ctx);
    if (zeroPolys(spec)) {
        SeriesSum out;
        out.value = BigComplex(ctx);
        out.isComplex = spec.isComplex();
        out.termsUsed = 1;
        return out;
    }
    const double peak = peakMagnitude(spec);
    const int extra = peak > 0 ? static_cast<int>(std::ceil(peak)) + 2 : 0;
    const PrecisionContext work = extra > 0 ? ctx.widened(extra) : ctx;
    if (spec.isComplex()) return sumWith<BigComplex>(spec, ctx, work);
    return sumWith<BigReal>(spec, ctx, work);
}

BigReal evalSeries(const SeriesSpec& spec, const PrecisionContext& ctx) {
    if (spec.isComplex()) throw DomainError(spec.id + ": complex series; use evalSeriesComplex");
    return sumSeries(spec, ctx).value.re().in(ctx);
}

BigComplex evalSeriesComplex(const SeriesSpec& spec, const PrecisionContext& ctx) {
    return sumSeries(spec, ctx).value.in(ctx);
}

BigComplex seriesTerm(const SeriesSpec& spec, long n, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("term index must be nonnegative");
    if (spec.isComplex()) {
        TermStream<BigComplex> s(spec, ctx);
        while (s.n() < n) s.advance();
        return s.current();
    }
    TermStream<BigReal> s(spec, ctx);
    while (s.n() < n) s.advance();
    return BigComplex(s.current(), BigReal(ctx));
}

double empiricalRate(const SeriesSpec& spec, long from, long to) {
    if (from < 1 || to <= from) throw DomainError("empiricalRate needs 1 <= from < to");
    const PrecisionContext low(30);
    constexpr long kBlock = 16;
    std::vector<double> ns;
    std::vector<double> ys;
    auto run = [&](auto& stream) {
        double best = -INFINITY;
        long bestN = 0;
        for (; stream.n() <= to; stream.advance()) {
            if (stream.n() < from) continue;
            const auto t = stream.current();
            double v;
            if constexpr (std::is_same_v<std::decay_t<decltype(t)>, BigReal>) {
                v = t.log10Abs();
            } else {
                v = abs(t).log10Abs();
            }
            if (v > best) {
                best = v;
                bestN = stream.n();
            }
            if ((stream.n() - from + 1) % kBlock == 0) {
                if (std::isfinite(best)) {
                    ns.push_back(static_cast<double>(bestN));
                    ys.push_back(best);
                }
                best = -INFINITY;
            }
        }
    };
    if (spec.isComplex()) {
        TermStream<BigComplex> s(spec, low);
        run(s);
    } else {
        TermStream<BigReal> s(spec, low);
        run(s);
    }
    if (ns.size() < 4) throw DomainError(spec.id + ": too few nonzero terms to fit a rate");
    // Least squares y = a + b n + c log10 n via the 3x3 normal equations.
    double m[3][4] = {};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double row[3] = {1.0, ns[i], std::log10(ns[i])};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += row[r] * row[c];
            m[r][3] += row[r] * ys[i];
        }
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return std::pow(10.0, m[1][3] / m[1][1]);
}

}  // namespace pirel
