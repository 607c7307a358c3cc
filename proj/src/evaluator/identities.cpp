#include "pirel/evaluator/identities.hpp"

#include <chrono>
#include <functional>
#include <utility>

#include "pirel/catalog/series_spec.hpp"
#include "pirel/errors.hpp"
#include "pirel/evaluator/evaluate.hpp"
#include "pirel/numerics/constants.hpp"
#include "pirel/numerics/elliptic.hpp"
#include "pirel/numerics/hypergeometric.hpp"

namespace pirel {

namespace {

using Sides = std::pair<BigReal, BigReal>;
using Check = std::function<std::vector<Sides>(const PrecisionContext&)>;

Rational q(long n, long d = 1) { return Rational(n, d); }
BigReal num(const PrecisionContext& ctx, const Rational& r) { return BigReal(ctx, r); }

BigReal f21(const Rational& a, const Rational& b, const BigReal& z) {
    return hypergeometric({a, b}, {q(1)}, z);
}

// Sum_n (s)_n (1-s)_n / n!^2 P_n(x) z^n, through the series evaluator.
BigReal brafmanSeries(const Rational& s, const Rational& x, const Rational& z,
                      const PrecisionContext& ctx) {
    SeriesSpec spec;
    spec.id = "brafman";
    spec.family.tag = FamilyTag::PochS;
    spec.family.s = s;
    spec.legendreStride = 1;
    spec.legendreArg = ExactComplex(QuadExt(x));
    spec.z0 = ExactComplex(QuadExt(z));
    spec.poly = PolyQ{QuadExt(1)};
    return evalSeries(spec, ctx);
}

struct BrafmanArgs {
    BigReal alpha;
    BigReal beta;
};

BrafmanArgs brafmanArgs(const Rational& x, const Rational& z, const PrecisionContext& ctx) {
    const BigReal zz = num(ctx, z);
    const BigReal rho = sqrt(1 - 2 * num(ctx, x) * zz + zz * zz);
    return {(1 - rho - zz) / 2, (1 - rho + zz) / 2};
}

std::vector<Sides> brafman(const PrecisionContext& ctx) {
    const std::vector<std::pair<Rational, Rational>> points = {
        {q(11, 5), q(1, 10)}, {q(1, 2), q(1, 5)}, {q(1, 3), q(-1, 4)},
        {q(3, 2), q(1, 7)},   {q(-2), q(1, 8)}};
    std::vector<Sides> out;
    for (const Rational& s : {q(1, 6), q(1, 4), q(1, 3), q(1, 2)}) {
        for (const auto& [x, z] : points) {
            const auto [a, b] = brafmanArgs(x, z, ctx);
            out.emplace_back(brafmanSeries(s, x, z, ctx), f21(s, 1 - s, a) * f21(s, 1 - s, b));
        }
    }
    return out;
}

std::vector<Sides> brafmanQuadratic(const PrecisionContext& ctx) {
    const std::vector<std::pair<Rational, Rational>> points = {
        {q(11, 5), q(1, 10)}, {q(3, 2), q(1, 7)}, {q(5, 4), q(1, 6)},
        {q(2), q(1, 9)},      {q(11, 5), q(5, 576)}};
    std::vector<Sides> out;
    const BigReal p = pi(ctx);
    for (const auto& [x, z] : points) {
        const auto [a, b] = brafmanArgs(x, z, ctx);
        const BigReal ra = sqrt(a);
        const BigReal lhs = p * p / 4 * brafmanSeries(q(1, 2), x, z, ctx);
        const BigReal rhs = ellipK(2 * sqrt(ra) / (1 + ra)) * ellipK(sqrt(b)) / (1 + ra);
        out.emplace_back(lhs, rhs);
    }
    return out;
}

std::vector<Sides> cubicModular(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& pr : {q(1, 5), q(1, 3), q(1, 2), q(2, 3), q(4, 5)}) {
        const BigReal p = num(ctx, pr);
        const BigReal lhs = ellipK(sqrt(p * pow(2 + p, 3) / pow(1 + 2 * p, 3)));
        // K(k) = (π/2) 2F1(1/2, 1/2; 1; k²) on the small side.
        const BigReal m = p * p * p * (2 + p) / (1 + 2 * p);
        const BigReal rhs = (1 + 2 * p) * pi(ctx) / 2 * f21(q(1, 2), q(1, 2), m);
        out.emplace_back(lhs, rhs);
    }
    return out;
}

std::vector<Sides> euler(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& xr : {q(1, 5), q(1, 3), q(1, 2), q(3, 5), q(2, 3)}) {
        const BigReal x = num(ctx, xr);
        const BigReal m = x * x / (x * x - 1);
        const BigReal rhs = pi(ctx) / 2 * f21(q(1, 2), q(1, 2), m) / sqrt(1 - x * x);
        out.emplace_back(ellipK(x), rhs);
    }
    return out;
}

std::vector<Sides> quarterHalf(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& xr : {q(1, 5), q(1, 3), q(1, 2), q(2, 3), q(-1, 4)}) {
        const BigReal x = num(ctx, xr);
        const BigReal lhs = f21(q(1, 4), q(3, 4), x * x);
        const BigReal rhs = 2 / pi(ctx) * ellipKParam(2 * x / (1 + x)) / sqrt(1 + x);
        out.emplace_back(lhs, rhs);
    }
    return out;
}

std::vector<Sides> goursatThird(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& xr : {q(1, 40), q(1, 20), q(1, 10), q(1, 6), q(1, 5)}) {
        const BigReal x = num(ctx, xr);
        const BigReal w = 1 + 8 * x;
        const BigReal arg = BigReal(ctx, q(1, 2)) - (1 - 20 * x - 8 * x * x) / (2 * w * sqrt(w));
        out.emplace_back(f21(q(1, 3), q(2, 3), x), f21(q(1, 6), q(5, 6), arg) / sqrt(sqrt(w)));
    }
    return out;
}

std::vector<Sides> goursatSixth(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& tr : {q(1, 10), q(3, 10), q(1, 2), q(7, 10), q(9, 10)}) {
        const BigReal t = num(ctx, tr);
        const BigReal inner = 1 - 64 * (1 - t) * t * t * t / pow(9 - 8 * t, 3);
        const BigReal arg = (1 - sqrt(inner)) / 2;
        const BigReal rhs = sqrt(sqrt(1 - 8 * t / 9)) * f21(q(1, 3), q(2, 3), t);
        out.emplace_back(f21(q(1, 6), q(5, 6), arg), rhs);
    }
    return out;
}

std::vector<Sides> bailey(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& s : {q(1, 6), q(1, 3)}) {
        for (const Rational& xr : {q(1, 5), q(1, 3), q(2, 5), q(-1, 3), q(-1, 2)}) {
            const BigReal x = num(ctx, xr);
            const BigReal lhs = hypergeometric({s, s, 1 - s, 1 - s}, {q(1, 2), q(1), q(1)},
                                               -x * x / (4 * (1 - x)));
            out.emplace_back(lhs, f21(s, 1 - s, x) * f21(s, 1 - s, x / (x - 1)));
        }
    }
    return out;
}

std::vector<Sides> baileyQuarter(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    const BigReal p = pi(ctx);
    for (const Rational& xr : {q(1, 5), q(1, 4), q(1, 3), q(2, 5), q(1, 2)}) {
        const BigReal x = num(ctx, xr);
        const BigReal x2 = x * x;
        const BigReal z = -4 * x2 * x2 * pow(1 - x2, 2) / pow(1 - 2 * x2, 2);
        const BigReal lhs =
            p * p / 4 * hypergeometric({q(1, 4), q(1, 4), q(3, 4), q(3, 4)}, {q(1, 2), q(1), q(1)}, z);
        out.emplace_back(lhs, ellipK(x) * ellipKParam(x2 / (2 * x2 - 1)));
    }
    return out;
}

std::vector<Sides> baileySecond(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    for (const Rational& xr : {q(9, 20), q(1, 2), q(11, 20), q(3, 5), q(13, 20)}) {
        const BigReal x = num(ctx, xr);
        const BigReal xp = sqrt(1 - x * x);
        const BigReal z = 16 * x * x * xp * xp * pow(xp * xp - x * x, 2);
        const BigReal lhs = pi(ctx) * kSqrt2(ctx) *
                            hypergeometric({q(1, 4), q(1, 4), q(1, 4), q(3, 4)},
                                           {q(1, 2), q(1, 2), q(1)}, z);
        const BigReal rhs = (ellipK(x) + ellipK(xp)) * ellipKParam(BigReal(ctx, q(1, 2)) - x * xp);
        out.emplace_back(lhs, rhs);
    }
    return out;
}

std::vector<Sides> baileyGamma(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    const BigReal p = pi(ctx);
    // Γ(3/4) = π √2 / Γ(1/4).
    const BigReal g34 = p * sqrt(BigReal(ctx, 2)) / gammaQuarterConst(ctx);
    for (const Rational& xr : {q(1, 2), q(11, 20), q(3, 5), q(13, 20), q(3, 4)}) {
        const BigReal x = num(ctx, xr);
        const BigReal xp = sqrt(1 - x * x);
        const BigReal z = pow(1 - 2 * x * x, 4) / (16 * x * x * (x * x - 1));
        const BigReal lhs = p * p * p / (sqrt(2 * x * xp) * pow(g34, 4)) *
                            hypergeometric({q(1, 4), q(1, 4), q(1, 4)}, {q(1, 2), q(3, 4)}, z);
        out.emplace_back(lhs, pow(ellipK(x) + ellipK(xp), 2));
    }
    return out;
}

std::vector<Sides> clausen(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    const BigReal p = pi(ctx);
    for (const Rational& xr : {q(1, 10), q(1, 5), q(1, 4), q(1, 3), q(2, 5)}) {
        const BigReal x = num(ctx, xr);
        const BigReal lhs = hypergeometric({q(1, 2), q(1, 2), q(1, 2)}, {q(1), q(1)},
                                           4 * x * x * (1 - x * x));
        const BigReal rhs = 4 / (p * p * (1 + x)) * ellipK(x) * ellipK(2 * sqrt(x) / (1 + x));
        out.emplace_back(lhs, rhs);
    }
    return out;
}

std::vector<Sides> clausenCubic(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    const BigReal pp = pi(ctx);
    for (const Rational& pr : {q(1, 20), q(1, 10), q(1, 5), q(3, 10), q(2, 5)}) {
        const BigReal p = num(ctx, pr);
        const BigReal z = 4 * pow(p, 3) * pow(1 + p, 3) * (1 - p) * (2 + p) / pow(1 + 2 * p, 2);
        const BigReal lhs = hypergeometric({q(1, 2), q(1, 2), q(1, 2)}, {q(1), q(1)}, z);
        const BigReal rhs = 4 / (pp * pp * (1 + 2 * p)) *
                            ellipKParam(pow(p, 3) * (2 + p) / (1 + 2 * p)) *
                            ellipKParam(p * pow(2 + p, 3) / pow(1 + 2 * p, 3));
        out.emplace_back(lhs, rhs);
    }
    return out;
}

std::vector<Sides> legendreRelation(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    const BigReal half = pi(ctx) / 2;
    for (long j = 1; j <= 50; ++j) {
        const BigReal x = num(ctx, q(j, 51));
        const BigReal xp = sqrt(1 - x * x);
        const BigReal k = ellipK(x);
        const BigReal kp = ellipK(xp);
        out.emplace_back(ellipE(x) * kp + ellipE(xp) * k - k * kp, half);
    }
    return out;
}

std::vector<Sides> generalizedRelation(const PrecisionContext& ctx) {
    std::vector<Sides> out;
    const BigReal p = pi(ctx);
    for (const Rational& s : {q(1, 6), q(1, 4), q(1, 3)}) {
        const BigReal target = p / 2 * cos(p * num(ctx, s)) / (1 + 2 * num(ctx, s));
        for (long j = 1; j <= 10; ++j) {
            const BigReal x = num(ctx, q(j, 11));
            const BigReal xp = sqrt(1 - x * x);
            const BigReal k = ellipKs(s, x);
            const BigReal kp = ellipKs(s, xp);
            out.emplace_back(ellipEs(s, x) * kp + ellipEs(s, xp) * k - k * kp, target);
        }
    }
    return out;
}

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> r = {
        {"brafman", brafman},
        {"brafman-quadratic", brafmanQuadratic},
        {"cubic-modular", cubicModular},
        {"euler-transform", euler},
        {"quarter-half", quarterHalf},
        {"goursat-third", goursatThird},
        {"goursat-sixth", goursatSixth},
        {"bailey-4f3", bailey},
        {"bailey-quarter", baileyQuarter},
        {"bailey-second", baileySecond},
        {"bailey-gamma", baileyGamma},
        {"clausen", clausen},
        {"clausen-cubic", clausenCubic},
        {"legendre-relation", legendreRelation},
        {"generalized-legendre", generalizedRelation},
    };
    return r;
}

}  // namespace

std::vector<std::string> identityNames() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

VerifyReport checkIdentity(std::string_view name, const PrecisionContext& ctx) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        const auto start = std::chrono::steady_clock::now();
        VerifyReport report;
        report.id = n;
        report.digitsRequested = ctx.digits();
        report.toleranceExponent = ctx.digits() - 5;
        const auto sides = fn(ctx);
        BigReal worst(ctx);
        for (const auto& [lhs, rhs] : sides) worst = max(worst, abs(lhs - rhs));
        report.termsUsed = static_cast<long>(sides.size());
        grade(report, worst, ctx);
        report.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        return report;
    }
    throw NotFoundError("no identity named '" + std::string(name) + "'");
}

std::vector<VerifyReport> identitySuite(const PrecisionContext& ctx) {
    std::vector<VerifyReport> out;
    for (const auto& name : identityNames()) {
        try {
            out.push_back(checkIdentity(name, ctx));
        } catch (const std::exception& e) {
            VerifyReport r;
            r.id = name;
            r.digitsRequested = ctx.digits();
            r.toleranceExponent = ctx.digits() - 5;
            r.absError = BigReal(ctx);
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace pirel
