#include "pirel/catalog/generators.hpp"

#include "pirel/errors.hpp"

namespace pirel {

namespace {

using Coeffs = std::vector<long>;

PolyQ poly(const Coeffs& c) {
    std::vector<QuadExt> q;
    q.reserve(c.size());
    for (long v : c) q.emplace_back(v);
    return PolyQ(q);
}

Rational at(const PolyQ& p, const Rational& k) { return qeval(p, k).rational(); }

void requireOpenUnit(const Rational& k, const char* what) {
    if (k.sign() <= 0 || k >= Rational(1)) {
        throw DomainError(std::string(what) + " needs 0 < k < 1, got " + k.toString());
    }
}

std::string paramLabel(const char* name, const Rational& v) {
    return std::string(name) + "=" + v.toString();
}

SeriesSpec base(std::string id, std::string title, TermFamily family, const Rational& x,
                const Rational& z0, const std::vector<Rational>& c, ClosedForm rhs) {
    SeriesSpec spec;
    spec.id = std::move(id);
    spec.title = std::move(title);
    spec.family = std::move(family);
    spec.legendreStride = 1;
    spec.legendreArg = ExactComplex(QuadExt(x));
    spec.z0 = ExactComplex(QuadExt(z0));
    std::vector<QuadExt> q(c.begin(), c.end());
    spec.poly = PolyQ(q);
    spec.rhs = std::move(rhs);
    return spec;
}

TermFamily pochS(const Rational& s) {
    TermFamily f;
    f.tag = FamilyTag::PochS;
    f.s = s;
    return f;
}

}  // namespace

SeriesSpec genThm1(const Rational& k) {
    requireOpenUnit(k, "genThm1");
    const Rational kp1 = k + 1;
    const Rational a = at(poly({1, 0, 1}), k);    // k^2 + 1
    const Rational b = at(poly({-1, 2, 1}), k);   // k^2 + 2k - 1
    const Rational x = at(poly({1, -2, 0, 6, -1}), k) / (a * b);
    const Rational z0 = a * b / (Rational(16) * kp1 * kp1);

    const PolyQ km1 = poly({-1, 1});
    const PolyQ kk = poly({0, 1});
    const PolyQ c3 = PolyQ{4} * km1 * km1 * kk * kk * poly({4, 3, 1}) * poly({4, 3, 1});
    const PolyQ c2 = PolyQ{12} * km1 * kk * poly({4, -3, 5, 10, 10, 5, 1});
    const PolyQ c1 = poly({4, -28, 63, -56, -9, 8, 37, 36, 9});
    const PolyQ c0 = poly({-1, 2, 1}) * poly({-1, 2, 1}) * poly({1, -2, 3, 0, 2});

    const Rational rhs = Rational(2) * kp1 * kp1 * kp1 * a;
    return base("thm1(" + paramLabel("k", k) + ")", "binomial-squared P_n family, k=" + k.toString(),
                TermFamily{}, x, z0, {at(c0, k), at(c1, k), at(c2, k), at(c3, k)},
                overPi(QuadExt(rhs)));
}

SeriesSpec genThm2(const Rational& k) {
    // k > (√41 - 5)/8  <=>  (8k + 5)^2 > 41 for k > 0.
    const Rational t = Rational(8) * k + 5;
    if (k.sign() <= 0 || k >= Rational(1) || t * t <= Rational(41)) {
        throw DomainError("genThm2 needs (sqrt(41)-5)/8 < k < 1, got " + k.toString());
    }
    const Rational q = at(poly({1, -3, 4}), k);  // 4k^2 - 3k + 1
    const Rational x = at(poly({1, -3, 2, -2}), k) / q;
    const Rational z0 = -(k + 1) * q / (Rational(64) * k);

    const PolyQ km1 = poly({-1, 1});
    const PolyQ tkm1 = poly({-1, 2});
    const PolyQ sq = poly({1, 3, 4});
    const Rational c3 = at(PolyQ{4} * km1 * km1 * tkm1 * sq * sq, k) / (k + 1);
    const PolyQ c2 = PolyQ{12} * km1 * tkm1 * poly({-1, 0, 1, 0, 16});
    const PolyQ c1 = poly({-9, 47, -93, 97, 102, -400, 288});
    const PolyQ c0 = PolyQ{2} * poly({-1, 6, -14, 16, 9, -44, 32});

    // 8 k^(3/2) q = 8 k q √k.
    const QuadExt rhs = QuadExt(Rational(8) * k * q) * QuadExt::sqrtOf(k);
    return base("thm2(" + paramLabel("k", k) + ")",
                "binomial-squared P_n family with negative z0, k=" + k.toString(), TermFamily{}, x,
                z0, {at(c0, k), at(c1, k), c2.isZero() ? Rational(0) : at(c2, k), c3},
                overPi(rhs));
}

SeriesSpec genThm3(const Rational& k) {
    requireOpenUnit(k, "genThm3");
    if (k == Rational(1, 3)) {
        throw DomainError(
            "genThm3 is singular at k=1/3; its limit is the catalog entry 'ramaleg1'");
    }
    const Rational a = at(poly({1, -3}), k);    // 1 - 3k
    const Rational b = at(poly({1, 0, 3}), k);  // 1 + 3k^2
    const Rational c = at(poly({1, 3}), k);     // 1 + 3k
    const Rational kp1 = k + 1;
    const Rational x = kp1 * at(poly({1, -4, 7}), k) / (a * b);
    const Rational z0 = kp1 * a * b / (c * c);

    const PolyQ km1 = poly({-1, 1});
    const PolyQ kk = poly({0, 1});
    const PolyQ f = poly({8, 15, 9});
    const Rational c3 = at(PolyQ{16} * km1 * km1 * kk * kk * f * f, k) / (kp1 * kp1);
    const PolyQ c2 = PolyQ{48} * km1 * kk * poly({8, -15, 27, 27, 81});
    const PolyQ c1 = poly({4, -33, 45}) * poly({4, -17, 17, -3, 63});
    const PolyQ m3 = poly({1, -3});
    const PolyQ c0 = PolyQ{3} * m3 * m3 * m3 * m3 * poly({1, 1, 2});

    // 3√2 (1+3k)^(5/2) (1+3k²)/(1+k) = 3 (1+3k)^2 (1+3k²)/(1+k) · √(2(1+3k)).
    const QuadExt rhs = QuadExt(Rational(3) * c * c * b / kp1) * QuadExt::sqrtOf(Rational(2) * c);
    return base("thm3(" + paramLabel("k", k) + ")", "(1/4)_n(3/4)_n P_n family, k=" + k.toString(),
                pochS(Rational(1, 4)), x, z0, {at(c0, k), at(c1, k), at(c2, k), c3},
                overPi(rhs));
}

SeriesSpec genThm4(const Rational& k) {
    requireOpenUnit(k, "genThm4");
    const Rational a = at(poly({1, -2, -2}), k);  // 1 - 2k - 2k^2
    const Rational b = at(poly({1, -2, 4}), k);   // 1 - 2k + 4k^2
    const Rational c = at(poly({1, 1, 1}), k);    // 1 + k + k^2
    const Rational d = at(poly({1, 2}), k);       // 1 + 2k
    if (a.isZero()) throw DomainError("genThm4 is singular where 1-2k-2k^2 = 0");
    const Rational x = at(poly({1, -4, 6, -4, 10}), k) / (a * b);
    const Rational z0 = c * a * b / (d * d * d);

    const PolyQ km1 = poly({-1, 1});
    const PolyQ kk = poly({0, 1});
    const PolyQ f = poly({3, 4, 2});
    const PolyQ g = poly({3, 2, 4});
    const Rational c3 = at(PolyQ{9} * km1 * km1 * kk * kk * f * f * g * g, k) / c;
    const PolyQ c2 = PolyQ{27} * km1 * kk * poly({9, -18, 10, 12, 60, 160, 240, 192, 64});
    const PolyQ c1 = poly({9, -144, 540, -584, 314, -228, -1256, -1072, 768, 2560, 1280});
    const PolyQ c0 = PolyQ{2} * poly({1, -2, -2}) * poly({1, -2, -2}) *
                     poly({1, -10, 12, -24, 16, 0, 32});

    const QuadExt rhs = QuadExt(0, d * d * d * d * b, BigInt(3));
    return base("thm4(" + paramLabel("k", k) + ")", "(1/3)_n(2/3)_n P_n family, k=" + k.toString(),
                pochS(Rational(1, 3)), x, z0, {at(c0, k), at(c1, k), at(c2, k), c3},
                overPi(rhs));
}

std::vector<SeriesSpec> genGuic3(const Rational& s) {
    if (s.sign() <= 0 || s >= Rational(1)) {
        throw DomainError("genGuic3 needs 0 < s < 1, got " + s.toString());
    }
    if (s == Rational(1, 2)) {
        throw DomainError("genGuic3 pattern a divides by (1-2s)^2 and is undefined at s=1/2");
    }
    const ClosedForm rhs = sinPiOverPi(s);
    const Rational one(1);
    const Rational quarter(1, 4);
    std::vector<SeriesSpec> out;
    auto make = [&](char pattern, FamilyTag tag, std::vector<QuadExt> p) {
        SeriesSpec spec;
        spec.id = std::string("guic3") + pattern + "(" + paramLabel("s", s) + ")";
        spec.title = std::string("4F3 sum equal to sin(pi s)/pi, pattern ") + pattern +
                     ", s=" + s.toString();
        spec.family.tag = tag;
        spec.family.s = s;
        spec.z0 = ExactComplex(QuadExt(quarter));
        spec.poly = PolyQ(std::move(p));
        spec.rhs = rhs;
        out.push_back(std::move(spec));
    };
    const Rational w = (one - Rational(2) * s) * (one - Rational(2) * s);
    make('a', FamilyTag::Guic3A,
         {s * (one - s) / w, Rational(2) * (one - s + s * s) / w, Rational(3) / w,
          Rational(-6) / w});
    make('b', FamilyTag::Guic3B, {s * (one - s), Rational(2), Rational(3)});
    make('c', FamilyTag::Guic3C, {s, Rational(0), Rational(-3) / s});
    return out;
}

BigReal thm1RateFormula(const BigReal& k) {
    const BigReal kp1 = k + 1;
    const BigReal first = (1 - 2 * k + 6 * k * k * k - k * k * k * k) / (kp1 * kp1);
    const BigReal inner = k * (1 - k) / kp1;
    return first + 4 * inner * sqrt(inner);
}

Rational thm4RateFormula(const Rational& k) {
    const Rational b = at(poly({1, -2, 4}), k);
    const Rational d = at(poly({1, 2}), k);
    return at(poly({1, 1, 1}), k) * b * b / (d * d * d);
}

Rational normalizationScale(const SeriesSpec& spec) {
    BigInt den(1);
    BigInt num(0);
    auto visit = [&](const Rational& r) {
        if (r.isZero()) return;
        den = lcm(den, r.den());
    };
    for (const PolyQ* p : {&spec.poly, &spec.polyPrev}) {
        for (const auto& c : p->coefficients()) {
            visit(c.a());
            visit(c.b());
        }
    }
    auto gather = [&](const Rational& r) {
        if (r.isZero()) return;
        const Rational scaled = r * Rational(den);
        num = gcd(num, scaled.num());
    };
    for (const PolyQ* p : {&spec.poly, &spec.polyPrev}) {
        for (const auto& c : p->coefficients()) {
            gather(c.a());
            gather(c.b());
        }
    }
    if (num.isZero()) return Rational(1);
    Rational lambda = Rational(den) / Rational(abs(num));
    if (spec.rhs.sign() < 0) lambda = -lambda;
    return lambda;
}

SeriesSpec normalize(const SeriesSpec& spec) {
    SeriesSpec out = spec;
    if (out.legendreStride > 0 && out.legendreArg.isReal() && out.legendreArg.re.sign() < 0) {
        out.legendreArg.re = -out.legendreArg.re;
        if (out.legendreStride % 2 == 1) {
            out.z0.re = -out.z0.re;
            out.z0.im = -out.z0.im;
        }
    }
    const QuadExt lambda(normalizationScale(out));
    out.poly *= lambda;
    out.polyPrev *= lambda;
    out.rhs.coeff *= lambda;
    return out;
}

}  // namespace pirel
