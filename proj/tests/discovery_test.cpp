#include <gtest/gtest.h>

#include <random>

#include "pirel/catalog/catalog.hpp"
#include "pirel/discovery/pipeline.hpp"
#include "pirel/discovery/pslq.hpp"
#include "pirel/errors.hpp"
#include "pirel/numerics/elliptic.hpp"
#include "pirel/numerics/hypergeometric.hpp"

using namespace pirel;

namespace {

BigComplex cnum(const PrecisionContext& ctx, const Rational& r) { return BigComplex(BigReal(ctx, r)); }

BigReal absDiff(const BigComplex& a, const BigComplex& b) { return abs(a - b); }

/// Sign-normalised integer tuple of a polynomial that is an integer
/// multiple of a primitive one.
std::vector<std::string> primitive(const PolyQ& p) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i <= 3; ++i) out.push_back(p.coeff(i).toString());
    return out;
}

/// 2F1(a, b; 1; m) continued along the ray from 0 to m by Taylor steps of
/// the hypergeometric equation, so |m| >= 1 works away from the cut.
BigComplex f21Continued(const Rational& a, const Rational& b, const BigComplex& m) {
    const auto& ctx = m.context();
    const BigReal eps = BigReal::pow10(ctx, -(ctx.digits() + 10));
    const BigReal quarter(ctx, Rational(1, 4));
    if (abs(m) < BigReal(ctx, Rational(1, 2))) return hypergeometric({a, b}, {Rational(1)}, m);
    const BigComplex dir = m / abs(m);
    BigComplex z = dir * quarter;
    BigComplex y = hypergeometric({a, b}, {Rational(1)}, z);
    BigComplex dy = hypergeometric({a + 1, b + 1}, {Rational(2)}, z) * BigReal(ctx, a * b);
    const BigReal s(ctx, a + b + 1), ab(ctx, a * b);
    while (true) {
        const BigReal radius = std::min(abs(z), abs(1 - z), [](const BigReal& u, const BigReal& v) { return u < v; });
        BigReal step = radius * BigReal(ctx, Rational(2, 5));
        const bool last = !(step < abs(m - z));
        const BigComplex w = last ? m - z : dir * step;
        const BigComplex p0 = z * (1 - z), p1 = 1 - 2 * z, q0 = BigComplex(ctx, 1) - s * z;
        BigComplex c0 = y, c1 = dy, wn = w, sum = y + dy * w, dsum = dy;
        for (long n = 0;; ++n) {
            const BigComplex c2 =
                -((p1 * n + q0) * c1 * (n + 1) - c0 * (BigReal(ctx, n * (n - 1)) + s * n + ab)) / (p0 * ((n + 2) * (n + 1)));
            dsum += c2 * wn * (n + 2);
            wn *= w;
            const BigComplex term = c2 * wn;
            sum += term;
            c0 = c1;
            c1 = c2;
            if (n > 8 && abs(term) < eps * abs(sum)) break;
        }
        y = sum;
        dy = dsum;
        z += w;
        if (last) return y;
    }
}

/// K_sigma(m) = (pi/2) 2F1(1/2 - sigma, 1/2 + sigma; 1; m), complex m.
BigComplex kSigma(const Rational& sigma, const BigComplex& m) {
    return f21Continued(Rational(1, 2) - sigma, Rational(1, 2) + sigma, m) * (pi(m.context()) / 2);
}

BigComplex eSigma(const Rational& sigma, const BigComplex& m) {
    return f21Continued(Rational(-1, 2) - sigma, Rational(1, 2) + sigma, m) * (pi(m.context()) / 2);
}

/// K(ma(t)) K(mb(t)) straight from the argument maps.
BigComplex product(const TransformChain& chain, const BigComplex& t, const std::optional<BigComplex>& x,
                   const Rational& sigma) {
    const auto j = chainJets(chain, t, x, 1);
    return kSigma(sigma, j.ma.value()) * kSigma(sigma, j.mb.value());
}

}  // namespace

TEST(Jet, ElementaryFunctions) {
    const PrecisionContext ctx(50);
    const Jet z = Jet::variable(cnum(ctx, 4), 4);
    const Jet r = sqrt(z);
    // sqrt(4 + h) = 2 + h/4 - h^2/64 + h^3/512.
    EXPECT_LT(absDiff(r[0], cnum(ctx, 2)), BigReal::pow10(ctx, -45));
    EXPECT_LT(absDiff(r[1], cnum(ctx, Rational(1, 4))), BigReal::pow10(ctx, -45));
    EXPECT_LT(absDiff(r[2], cnum(ctx, Rational(-1, 64))), BigReal::pow10(ctx, -45));
    EXPECT_LT(absDiff(r[3], cnum(ctx, Rational(1, 512))), BigReal::pow10(ctx, -45));
    const Jet one = z * inverse(z);
    EXPECT_LT(absDiff(one[0], cnum(ctx, 1)), BigReal::pow10(ctx, -45));
    for (int k = 1; k < 4; ++k) EXPECT_LT(abs(one[k]), BigReal::pow10(ctx, -45));
    const Jet p = pow(z, Rational(-3, 2));
    const Jet q = inverse(z * r);
    for (int k = 0; k < 4; ++k) EXPECT_LT(absDiff(p[k], q[k]), BigReal::pow10(ctx, -45));
    EXPECT_LT(absDiff(derivative(z * z)[0], cnum(ctx, 8)), BigReal::pow10(ctx, -45));
}

TEST(Chain, LookupAndSigma) {
    EXPECT_EQ(chains().size(), 6u);
    EXPECT_THROW(chainByName("nope"), NotFoundError);
    EXPECT_EQ(finalSigma(chainByName("thm1")), Rational(0));
    EXPECT_EQ(finalSigma(chainByName("thm3")), Rational(0));
    EXPECT_EQ(finalSigma(chainByName("thm4")), Rational(1, 3));
    EXPECT_THROW(chainPoint(chainByName("thm1"), Rational(3, 2)), PipelineError);
}

TEST(Chain, ComplementaryAtPrintedPoints) {
    const PrecisionContext ctx(80);
    const std::pair<const char*, Rational> cases[] = {
        {"thm1", Rational(1, 2)}, {"thm1", Rational(2, 3)}, {"thm2", Rational(1, 3)},
        {"thm3", Rational(1, 5)}, {"thm4", Rational(1, 2)}, {"guic1", Rational(1, 4)}};
    for (const auto& [name, k] : cases) {
        const auto& chain = chainByName(name);
        const auto p = chainPoint(chain, k);
        std::optional<BigComplex> x;
        if (p.legendreArg) x = complexNumeric(*p.legendreArg, ctx);
        const auto j = chainJets(chain, complexNumeric(p.z0, ctx), x, 1);
        EXPECT_LT(abs(j.ma.value() + j.mb.value() - 1), BigReal::pow10(ctx, -75)) << name;
    }
}

TEST(Chain, ThmOnePointHasBetaRootK) {
    // At k: sqrt(beta) = k and alpha = (1-k)^2/(1+k)^2.
    const PrecisionContext ctx(60);
    const auto& chain = chainByName("thm1");
    for (const auto& k : {Rational(1, 2), Rational(2, 3), Rational(1, 5)}) {
        const auto p = chainPoint(chain, k);
        const BigComplex t = complexNumeric(p.z0, ctx);
        const BigComplex x = complexNumeric(*p.legendreArg, ctx);
        const BigComplex rho = sqrt(1 - 2 * x * t + t * t);
        const BigComplex beta = (1 - rho + t) / 2;
        const BigComplex alpha = (1 - rho - t) / 2;
        EXPECT_LT(absDiff(beta, cnum(ctx, k * k)), BigReal::pow10(ctx, -55));
        EXPECT_LT(absDiff(alpha, cnum(ctx, (1 - k) * (1 - k) / ((1 + k) * (1 + k)))), BigReal::pow10(ctx, -55));
    }
}

TEST(Tower, OrderZeroIsThePlainProduct) {
    const PrecisionContext ctx(50);
    const auto& chain = chainByName("thm1");
    const auto tower = derivTower(chain, chainPoint(chain, Rational(1, 2)), ctx, 0);
    ASSERT_EQ(tower.size(), 1u);
    EXPECT_LT(absDiff(tower[0].c[0][0], cnum(ctx, 1)), BigReal::pow10(ctx, -60));
    EXPECT_TRUE(tower[0].c[0][1].isZero() && tower[0].c[1][0].isZero() && tower[0].c[1][1].isZero());
}

TEST(Tower, AgreesWithFiniteDifferences) {
    const int digits = 60;
    const PrecisionContext ctx(digits);
    const BigReal h = BigReal::pow10(ctx, -(digits / 4));
    const BigReal tol = BigReal::pow10(ctx, -(digits / 3));
    const std::pair<const char*, std::vector<Rational>> samples[] = {
        {"thm1", {Rational(1, 2), Rational(2, 3), Rational(3, 5)}},
        {"thm2", {Rational(1, 3), Rational(1, 2), Rational(2, 5)}},
        {"thm3", {Rational(1, 5), Rational(1, 2), Rational(1, 7)}},
        {"thm4", {Rational(1, 2), Rational(1, 4), Rational(1, 5)}},
        {"guic1", {Rational(1, 4), Rational(1, 5), Rational(1, 3)}},
        {"clausen", {Rational(3, 10), Rational(1, 5), Rational(1, 4)}},
    };
    for (const auto& [name, ks] : samples) {
        const auto& chain = chainByName(name);
        const Rational sigma = finalSigma(chain);
        for (const auto& k : ks) {
            const auto p = chainPoint(chain, k);
            std::optional<BigComplex> x;
            if (p.legendreArg) x = complexNumeric(*p.legendreArg, ctx);
            const BigComplex t0 = complexNumeric(p.z0, ctx);
            const auto jets = chainJets(chain, t0, x, 4);
            const auto tower = derivTower(jets, sigma, 3);
            const BigComplex ka = kSigma(sigma, jets.ma.value());
            const BigComplex ea = eSigma(sigma, jets.ma.value());
            const BigComplex kb = kSigma(sigma, jets.mb.value());
            const BigComplex eb = eSigma(sigma, jets.mb.value());
            auto valueOf = [&](const BilinearEK& e) {
                return e.c[0][0] * ka * kb + e.c[1][0] * ea * kb + e.c[0][1] * ka * eb + e.c[1][1] * ea * eb;
            };
            auto f = [&](int i) { return product(chain, t0 + BigComplex(h * i), x, sigma); };
            const BigComplex f0 = f(0), fp = f(1), fm = f(-1), fp2 = f(2), fm2 = f(-2);
            const BigComplex d1 = (fp - fm) / (2 * h);
            const BigComplex d2 = (fp - 2 * f0 + fm) / (h * h);
            const BigComplex d3 = (fp2 - 2 * fp + 2 * fm - fm2) / (2 * h * h * h);
            const std::string where = std::string(name) + " k=" + k.toString();
            EXPECT_LT(absDiff(valueOf(tower[0]), f0), tol) << where;
            EXPECT_LT(absDiff(valueOf(tower[1]), d1), tol * abs(d1) + tol) << where;
            EXPECT_LT(absDiff(valueOf(tower[2]), d2), tol * abs(d2) + tol) << where;
            EXPECT_LT(absDiff(valueOf(tower[3]), d3), tol * abs(d3) + tol) << where;
        }
    }
}

TEST(Solve, IdentityTowerGivesTarget) {
    const PrecisionContext ctx(40);
    std::vector<BilinearEK> tower(4);
    for (int i = 0; i < 4; ++i) {
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) tower[i].c[u][v] = BigComplex(ctx);
    }
    tower[0].c[0][0] = cnum(ctx, 1);
    tower[1].c[1][0] = cnum(ctx, 1);
    tower[2].c[0][1] = cnum(ctx, 1);
    tower[3].c[1][1] = cnum(ctx, 1);
    const auto a = solveA(tower, {cnum(ctx, 1), cnum(ctx, 0), cnum(ctx, 0), cnum(ctx, 0)});
    EXPECT_LT(absDiff(a[0], cnum(ctx, 1)), BigReal::pow10(ctx, -50));
    for (int i = 1; i < 4; ++i) EXPECT_LT(abs(a[i]), BigReal::pow10(ctx, -50));
    tower[3].c[1][1] = BigComplex(ctx);
    EXPECT_THROW(solveA(tower, legendreTarget(ctx)), SolveError);
}

TEST(Solve, LegendreCombinationHoldsNumerically) {
    // sum A_i (pi^2 G)^(i) evaluated with independent K, E values must equal
    // the generalized Legendre constant (pi/2) cos(pi sigma)/(1 + 2 sigma).
    const PrecisionContext ctx(100);
    const std::pair<const char*, Rational> cases[] = {
        {"thm1", Rational(1, 2)}, {"thm2", Rational(1, 3)}, {"thm3", Rational(1, 5)},
        {"thm4", Rational(1, 2)}, {"guic1", Rational(1, 4)}};
    for (const auto& [name, k] : cases) {
        const auto& chain = chainByName(name);
        const Rational sigma = finalSigma(chain);
        const auto p = chainPoint(chain, k);
        std::optional<BigComplex> x;
        if (p.legendreArg) x = complexNumeric(*p.legendreArg, ctx);
        const auto jets = chainJets(chain, complexNumeric(p.z0, ctx), x, 4);
        const auto tower = derivTower(jets, sigma, 3);
        const auto a = solveA(tower, legendreTarget(ctx));
        const BigComplex ka = kSigma(sigma, jets.ma.value()), ea = eSigma(sigma, jets.ma.value());
        const BigComplex kb = kSigma(sigma, jets.mb.value()), eb = eSigma(sigma, jets.mb.value());
        BigComplex total(ctx);
        for (int i = 0; i < 4; ++i) {
            const auto& e = tower[i].c;
            total += a[i] * (e[0][0] * ka * kb + e[1][0] * ea * kb + e[0][1] * ka * eb + e[1][1] * ea * eb);
        }
        const BigReal s(ctx, sigma);
        const BigReal expect = pi(ctx) / 2 * cos(pi(ctx) * s) / (1 + 2 * s);
        EXPECT_LT(absDiff(total, BigComplex(expect)), BigReal::pow10(ctx, -80)) << name;
    }
}

TEST(Pslq, TrivialRelations) {
    const PrecisionContext ctx(100);
    const BigReal s2 = sqrt(BigReal(ctx, 2));
    auto r = pslq({BigReal(ctx, 1), s2, 1 + s2}, 64);
    ASSERT_TRUE(r.relation);
    EXPECT_EQ(r.relation->coefficients, (std::vector<BigInt>{1, 1, -1}));
    r = pslq({pi(ctx), pi(ctx) / 2}, 64);
    ASSERT_TRUE(r.relation);
    EXPECT_EQ(r.relation->coefficients, (std::vector<BigInt>{1, -2}));
    EXPECT_THROW(pslq({pi(ctx)}, 64), DomainError);
}

TEST(Pslq, PlantedRelationsOfHeight32Bits) {
    const PrecisionContext ctx(200);
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> coef(-(1L << 32), 1L << 32);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 3 + trial % 3;
        std::vector<BigReal> x;
        std::vector<BigInt> c;
        BigReal last(ctx);
        for (int i = 0; i + 1 < n; ++i) {
            // log(p) for small primes: algebraically independent reals.
            BigReal v(ctx);
            mpfr_log_ui(v.raw(), static_cast<unsigned long>(std::array{2, 3, 5, 7, 11}[i]), MPFR_RNDN);
            x.push_back(v);
            c.emplace_back(coef(rng));
            last += BigReal(ctx, c.back()) * v;
        }
        x.push_back(last);
        c.emplace_back(-1);
        const auto r = pslq(x, 64);
        ASSERT_TRUE(r.relation) << trial;
        auto got = r.relation->coefficients;
        if ((got[0].sign() < 0) != (c[0].sign() < 0)) {
            for (auto& v : got) v = -v;
        }
        EXPECT_EQ(got, c) << trial;
        EXPECT_LT(r.relation->residual, BigReal::pow10(ctx, -100));
    }
}

TEST(Pslq, RandomRealsHaveNoSmallRelation) {
    const PrecisionContext ctx(200);
    gmp_randstate_t state;
    gmp_randinit_default(state);
    gmp_randseed_ui(state, 7);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<BigReal> x;
        for (int i = 0; i < 4; ++i) {
            BigReal v(ctx);
            mpfr_urandomb(v.raw(), state);
            x.push_back(v);
        }
        const auto r = pslq(x, 20);
        EXPECT_FALSE(r.relation);
        EXPECT_GE(r.normBound, BigReal(ctx, 1L << 16));
    }
    gmp_randclear(state);
}

TEST(Pslq, UncertifiableRelationIsInconclusive) {
    // The only relation has height 2^100, beyond the cap, and 30 digits
    // cannot push the norm bound past the cap before y underflows.
    const PrecisionContext ctx(30);
    const BigReal a = log(BigReal(ctx, 2));
    EXPECT_THROW(pslq({BigReal(ctx, 1), pow(BigReal(ctx, 2), -100L)}, 64), InconclusiveError);
    EXPECT_THROW(pslq({a, a * pow(BigReal(ctx, 2), -90L)}, 40), InconclusiveError);
}

TEST(Pipeline, RediscoversPrintedTuples) {
    const PrecisionContext ctx(120);
    const std::tuple<const char*, Rational, std::vector<std::string>, const char*> cases[] = {
        {"thm1", Rational(1, 2), {"14", "-171", "-4452", "2116"}, "thm1-k12"},
        {"thm1", Rational(2, 3), {"5537", "11304", "-173328", "53824"}, "thm1-k23"},
        {"thm2", Rational(1, 3), {"1", "-3", "-84", "-121"}, "thm2-k13"},
        {"guic1", Rational(1, 4), {"3", "26", "48", "-96"}, "guic1"},
    };
    for (const auto& [name, k, tuple, id] : cases) {
        const auto r = rediscover(chainByName(name), k, ctx);
        EXPECT_EQ(primitive(r.spec.poly), tuple) << name;
        EXPECT_TRUE(r.report.pass) << name;
        const SeriesSpec& c = lookup(id);
        EXPECT_EQ(r.spec.z0, c.z0) << name;
        EXPECT_EQ(r.spec.rhs, c.rhs) << name;
        const auto xc = xSubstitutionCheck(chainByName(name), chainPoint(chainByName(name), k), ctx);
        EXPECT_TRUE(xc.pass) << name << " " << xc.difference.toString(3);
    }
}

TEST(Pipeline, GeneralizedChainsMatchGenerators) {
    const PrecisionContext ctx(100);
    const auto t3 = rediscover(chainByName("thm3"), Rational(1, 5), ctx);
    EXPECT_EQ(t3.spec.poly, lookup("thm3-ex").poly);
    EXPECT_EQ(t3.spec.rhs, lookup("thm3-ex").rhs);
    const auto t4 = rediscover(chainByName("thm4"), Rational(1, 2), ctx);
    EXPECT_TRUE(t4.report.pass);
}

TEST(Pipeline, DegenerateAndNonComplementaryCases) {
    const PrecisionContext ctx(60);
    try {
        rediscover(chainByName("clausen"), Rational(3, 10), ctx);
        FAIL() << "expected a rank-deficient solve";
    } catch (const PipelineError& e) {
        EXPECT_EQ(e.stage(), "solve");
    }
    try {
        rediscover(chainByName("guic1"), Rational(1, 5), ctx);
        FAIL() << "expected a complementarity failure";
    } catch (const PipelineError& e) {
        EXPECT_EQ(e.stage(), "complementary");
    }
    try {
        rediscover(chainByName("thm3"), Rational(1, 3), ctx);
        FAIL() << "expected no point";
    } catch (const PipelineError& e) {
        EXPECT_EQ(e.stage(), "point");
    }
}

TEST(Pipeline, SeriesPolynomialOfPlainSum) {
    // A = (1, 0, 0, 0) with w = 1 gives p(n) = 1; A = (0, 1, 0, 0) gives n / z0.
    const PrecisionContext ctx(40);
    const BigComplex z0 = cnum(ctx, Rational(1, 8));
    const Jet w(cnum(ctx, 1), 4);
    auto p = seriesPolynomial({cnum(ctx, 1), BigComplex(ctx), BigComplex(ctx), BigComplex(ctx)}, w, z0);
    EXPECT_LT(absDiff(p[0], cnum(ctx, 1)), BigReal::pow10(ctx, -50));
    p = seriesPolynomial({BigComplex(ctx), cnum(ctx, 1), BigComplex(ctx), BigComplex(ctx)}, w, z0);
    EXPECT_LT(absDiff(p[1], cnum(ctx, 8)), BigReal::pow10(ctx, -50));
    EXPECT_LT(abs(p[0]), BigReal::pow10(ctx, -50));
}

TEST(Pipeline, PlaceholderTowerOnSyntheticJets) {
    // Constant arguments: the tower is (1, 0, 0, 0) then zeros either way.
    const PrecisionContext ctx(60);
    ChainJets j{Jet(cnum(ctx, Rational(1, 3)), 4), Jet(cnum(ctx, Rational(2, 3)), 4), Jet(cnum(ctx, 1), 4)};
    const auto a = derivTower(j, Rational(0), 3);
    const auto b = placeholderTower(j, Rational(0), 3);
    for (int i = 0; i < 4; ++i) {
        const auto fa = a[i].flat();
        const auto fb = b[i].flat();
        for (int r = 0; r < 4; ++r) EXPECT_LT(absDiff(fa[r], fb[r]), BigReal::pow10(ctx, -50));
    }
}
