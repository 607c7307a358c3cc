#include "pirel/discovery/chain.hpp"

#include "pirel/errors.hpp"

namespace pirel {

namespace {

using SK = StepKind;

Jet constant(const PrecisionContext& ctx, const Rational& r, int n) {
    return Jet(BigComplex(BigReal(ctx, r)), n);
}

BigInt surdOf(const Rational& r) {
    return squarefreeSplit(abs(r.num() * r.den())).core;
}

/// Applies one step to (prefactor, argument).
void applyStep(StepKind kind, Jet& pref, Jet& m) {
    const auto& ctx = m.context();
    const int n = m.length();
    switch (kind) {
        case SK::Quadratic: {
            const Jet sm = sqrt(m);
            const Jet d = 1 + sm;
            pref *= inverse(d);
            m = 4 * sm / (d * d);
            break;
        }
        case SK::Euler:
            pref *= pow(1 - m, Rational(-1, 2));
            m = m / (m - 1);
            break;
        case SK::QuarterHalf: {
            const Jet sm = sqrt(m);
            pref *= pow(1 + sm, Rational(-1, 2));
            m = 2 * sm / (1 + sm);
            break;
        }
        case SK::QuarterHalfAlt: {
            const Jet r = sqrt(1 - m);
            pref *= pow(constant(ctx, 2, n) / (1 + r), Rational(1, 2));
            m = (1 - r) / (1 + r);
            break;
        }
        case SK::Goursat13: {
            const Jet q = 1 + 8 * m;
            pref *= pow(q, Rational(-1, 4));
            const Jet num = 1 - 20 * m - 8 * (m * m);
            m = constant(ctx, Rational(1, 2), n) - num / (2 * pow(q, Rational(3, 2)));
            break;
        }
    }
}

Rational stepSigma(StepKind kind, const Rational& sigma) {
    Rational from;
    Rational to;
    switch (kind) {
        case SK::Quadratic:
        case SK::Euler: from = 0; to = 0; break;
        case SK::QuarterHalf:
        case SK::QuarterHalfAlt: from = Rational(1, 4); to = 0; break;
        case SK::Goursat13: from = Rational(1, 6); to = Rational(1, 3); break;
    }
    if (sigma != from) {
        throw DomainError(std::string(stepName(kind)) + " step needs sigma " + from.toString() +
                          ", got " + sigma.toString());
    }
    return to;
}

Rational baseSigma(const TransformChain& chain) {
    return chain.base == BaseKind::Clausen ? Rational(0) : Rational(1, 2) - chain.s;
}

void checkArgument(const Jet& m) {
    const BigComplex& v = m.value();
    const auto tol = BigReal::pow10(v.context(), -(v.context().digits() / 2));
    if (abs(v) < tol || abs(v - 1) < tol) {
        throw DomainError("chain argument hits a singular point of K");
    }
}

}  // namespace

std::string_view stepName(StepKind k) {
    switch (k) {
        case SK::Quadratic: return "quadratic";
        case SK::Euler: return "euler";
        case SK::QuarterHalf: return "quarter-half";
        case SK::QuarterHalfAlt: return "quarter-half-alt";
        case SK::Goursat13: return "goursat-13";
    }
    return "?";
}

const std::vector<TransformChain>& chains() {
    static const std::vector<TransformChain> all = {
        {"thm1", BaseKind::Brafman, Rational(1, 2), {SK::Quadratic}, {}},
        {"thm2", BaseKind::Brafman, Rational(1, 2), {SK::Quadratic}, {SK::Euler}},
        {"thm3", BaseKind::Brafman, Rational(1, 4), {SK::QuarterHalf}, {SK::QuarterHalf}},
        {"thm4", BaseKind::Brafman, Rational(1, 3), {SK::Goursat13}, {SK::Goursat13}},
        {"guic1", BaseKind::Bailey, Rational(1, 4), {SK::QuarterHalf}, {SK::QuarterHalfAlt}},
        {"clausen", BaseKind::Clausen, Rational(1, 2), {}, {SK::Quadratic}},
    };
    return all;
}

const TransformChain& chainByName(std::string_view name) {
    for (const auto& c : chains()) {
        if (c.name == name) return c;
    }
    throw NotFoundError("unknown chain '" + std::string(name) + "'");
}

Rational finalSigma(const TransformChain& chain) {
    Rational left = baseSigma(chain);
    Rational right = left;
    for (auto k : chain.left) left = stepSigma(k, left);
    for (auto k : chain.right) right = stepSigma(k, right);
    if (left != right) throw DomainError("chain factors end at different sigma");
    return left;
}

ChainPoint chainPoint(const TransformChain& chain, const Rational& k) {
    auto fail = [&](const std::string& why) {
        throw PipelineError("point", chain.name + " at k=" + k.toString() + ": " + why);
    };
    ChainPoint p;
    if (chain.name == "thm1") {
        if (k <= 0 || k >= 1) fail("needs 0 < k < 1");
        const Rational k2 = k * k;
        const Rational den = (k2 + 1) * (k2 + 2 * k - 1);
        if (den.isZero()) fail("x has a pole");
        p.legendreArg = ExactComplex(QuadExt((1 - 2 * k + 6 * k2 * k - k2 * k2) / den));
        p.z0 = ExactComplex(QuadExt(den / ((k + 1) * (k + 1))));
        p.surd = 1;
    } else if (chain.name == "thm2") {
        if (k <= 0) fail("needs k > 0");
        const Rational q = 4 * k * k - 3 * k + 1;
        p.legendreArg = ExactComplex(QuadExt((1 - 3 * k + 2 * k * k - 2 * k * k * k) / q));
        p.z0 = ExactComplex(QuadExt(-(1 + k) * q / (4 * k)));
        p.surd = surdOf(k);
    } else if (chain.name == "thm3") {
        if (k == Rational(1, 3) || k == Rational(-1, 3)) fail("x has a pole");
        const Rational a = 1 + 3 * k * k;
        p.legendreArg = ExactComplex(QuadExt((1 + k) * (1 - 4 * k + 7 * k * k) / ((1 - 3 * k) * a)));
        p.z0 = ExactComplex(QuadExt((1 + k) * (1 - 3 * k) * a / ((1 + 3 * k) * (1 + 3 * k))));
        p.surd = surdOf(2 * (1 + 3 * k));
    } else if (chain.name == "thm4") {
        const Rational a = 1 - 2 * k - 2 * k * k;
        const Rational b = 1 - 2 * k + 4 * k * k;
        if (a.isZero() || (1 + 2 * k).isZero()) fail("x has a pole");
        const Rational k2 = k * k;
        p.legendreArg = ExactComplex(QuadExt((1 - 4 * k + 6 * k2 - 4 * k2 * k + 10 * k2 * k2) / (a * b)));
        p.z0 = ExactComplex(QuadExt((1 + k + k2) * a * b / ((1 + 2 * k) * (1 + 2 * k) * (1 + 2 * k))));
        p.surd = 3;
    } else if (chain.name == "guic1") {
        if (k <= 0 || k >= 1) fail("needs 0 < y < 1");
        p.z0 = ExactComplex(QuadExt(k));
        p.surd = 2;
    } else if (chain.name == "clausen") {
        if (k <= 0 || k >= 1) fail("needs 0 < x < 1");
        p.z0 = ExactComplex(QuadExt(k));
        p.surd = 1;
    } else {
        fail("no closed-form point");
    }
    return p;
}

ChainJets chainJets(const TransformChain& chain, const BigComplex& z0,
                    const std::optional<BigComplex>& legendreArg, int length) {
    const auto& ctx = z0.context();
    const Jet t = Jet::variable(z0, length);
    Jet ma;
    Jet mb;
    switch (chain.base) {
        case BaseKind::Brafman: {
            if (!legendreArg) throw DomainError("Brafman chain needs a Legendre argument");
            const Jet rho = sqrt(1 - t * (*legendreArg * 2) + t * t);
            const BigComplex half(BigReal(ctx, Rational(1, 2)));
            ma = (1 - rho - t) * half;
            mb = (1 - rho + t) * half;
            break;
        }
        case BaseKind::Bailey: {
            const BigComplex twoI(BigReal(ctx), BigReal(ctx, 2));
            ma = 2 * t + sqrt(t * (1 - t)) * twoI;
            mb = ma / (ma - 1);
            break;
        }
        case BaseKind::Clausen:
            ma = t * t;
            mb = ma;
            break;
    }
    Jet pa(BigComplex(ctx, 1), length);
    Jet pb = pa;
    for (auto k : chain.left) {
        checkArgument(ma);
        applyStep(k, pa, ma);
    }
    for (auto k : chain.right) {
        checkArgument(mb);
        applyStep(k, pb, mb);
    }
    checkArgument(ma);
    checkArgument(mb);
    Jet w = inverse(4 * (pa * pb));
    return {ma, mb, w};
}

SeriesSpec baseSeries(const TransformChain& chain, const ChainPoint& point) {
    SeriesSpec spec;
    spec.id = chain.name + "-base";
    spec.poly = PolyQ{QuadExt(1)};
    switch (chain.base) {
        case BaseKind::Brafman:
            if (chain.s == Rational(1, 2)) {
                spec.family.tag = FamilyTag::CentralBinomialSquared;
            } else {
                spec.family.tag = FamilyTag::PochS;
                spec.family.s = chain.s;
            }
            spec.legendreStride = 1;
            spec.legendreArg = point.legendreArg.value();
            break;
        case BaseKind::Bailey:
            if (chain.s == Rational(1, 4)) {
                spec.family.tag = FamilyTag::QuadBinom;
            } else {
                spec.family.tag = FamilyTag::Guic3A;
                spec.family.s = chain.s;
            }
            spec.legendreStride = 0;
            break;
        case BaseKind::Clausen:
            throw DomainError("the Clausen base is not a single hypergeometric series in x");
    }
    const QuadExt scale(spec.family.scale());
    spec.z0 = ExactComplex(point.z0.re / scale, point.z0.im / scale);
    return spec;
}

}  // namespace pirel
