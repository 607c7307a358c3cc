#include "pirel/discovery/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "pirel/catalog/generators.hpp"
#include "pirel/discovery/pslq.hpp"
#include "pirel/errors.hpp"
#include "pirel/numerics/elliptic.hpp"

namespace pirel {

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Coefficient bound for identification: well inside the precision budget
/// and never above 2^256.
int identificationBits(const PrecisionContext& ctx, std::size_t basisSize) {
    const double bits = ctx.digits() * std::log2(10.0) / (2.0 * static_cast<double>(basisSize + 1));
    return std::clamp(static_cast<int>(bits), 8, 256);
}

/// Finds v = (p + q sqrt(d)) / r with small integers via a relation on
/// (v, 1) or (v, 1, sqrt(d)).
QuadExt identify(const BigReal& v, const BigInt& d, const std::string& what) {
    const auto& ctx = v.context();
    std::vector<BigReal> basis{v, BigReal(ctx, 1)};
    if (d != BigInt(1)) basis.push_back(sqrt(BigReal(ctx, d)));
    std::optional<Relation> rel;
    try {
        rel = pslq(basis, identificationBits(ctx, basis.size() - 1)).relation;
    } catch (const InconclusiveError& e) {
        throw PipelineError("identify", what + ": " + e.what());
    }
    if (!rel || rel->coefficients[0].isZero()) {
        throw PipelineError("identify", what + ": no relation over {1" +
                                            (basis.size() > 2 ? ", sqrt(" + d.toString() + ")" : std::string()) +
                                            "}");
    }
    const Rational den(rel->coefficients[0]);
    const Rational a = -Rational(rel->coefficients[1]) / den;
    if (basis.size() == 2) return QuadExt(a);
    return QuadExt(a, -Rational(rel->coefficients[2]) / den, d);
}

std::string chainId(const TransformChain& chain, const Rational& k) {
    return chain.name + "(k=" + k.toString() + ")";
}

/// cos(pi sigma)/(1 + 2 sigma).
BigReal legendreConstant(const Rational& sigma, const PrecisionContext& ctx) {
    const BigReal s(ctx, sigma);
    return cos(pi(ctx) * s) / (1 + 2 * s);
}

BigReal realPart(const BigComplex& v, const BigReal& scale, const std::string& what) {
    const auto& ctx = v.context();
    if (abs(v.im()) > scale * BigReal::pow10(ctx, -(ctx.digits() / 2))) {
        throw PipelineError("identify", what + " is not real");
    }
    return v.re();
}

}  // namespace

std::vector<BigComplex> seriesPolynomial(const std::vector<BigComplex>& a, const Jet& w,
                                         const BigComplex& z0) {
    const int order = static_cast<int>(a.size()) - 1;
    if (order > 3 || w.length() < order + 1) throw DomainError("seriesPolynomial handles order <= 3");
    const auto& ctx = z0.context();
    std::vector<BigComplex> d(order + 1, BigComplex(ctx));
    for (int j = 0; j <= order; ++j) {
        for (int i = j; i <= order; ++i) d[j] += a[i] * w.derivative(i - j) * binom(i, j);
    }
    // Falling factorials n(n-1)...(n-j+1) in the monomial basis.
    static const long ff[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 1, 0}, {0, 2, -3, 1}};
    std::vector<BigComplex> c(order + 1, BigComplex(ctx));
    BigComplex zpow(ctx, 1);
    const BigComplex zinv = 1 / z0;
    for (int j = 0; j <= order; ++j) {
        for (int p = 0; p <= order; ++p) c[p] += d[j] * zpow * ff[j][p];
        zpow *= zinv;
    }
    return c;
}

Rediscovery rediscover(const TransformChain& chain, const Rational& k, const PrecisionContext& ctx) {
    const ChainPoint point = chainPoint(chain, k);
    const std::string id = chainId(chain, k);
    const BigComplex t0 = complexNumeric(point.z0, ctx);
    std::optional<BigComplex> x;
    if (point.legendreArg) x = complexNumeric(*point.legendreArg, ctx);

    Rational sigma;
    ChainJets jets;
    try {
        sigma = finalSigma(chain);
        jets = chainJets(chain, t0, x, 4);
    } catch (const DomainError& e) {
        throw PipelineError("tower", id + ": " + e.what());
    }
    Rediscovery out;
    try {
        out.a = solveA(derivTower(jets, sigma, 3), legendreTarget(ctx));
    } catch (const SolveError& e) {
        throw PipelineError("solve", id + ": " + e.what());
    }
    const BigReal gap = abs(jets.ma.value() + jets.mb.value() - 1);
    if (gap > BigReal::pow10(ctx, -(ctx.digits() - 10))) {
        throw PipelineError("complementary", id + ": arguments are not complementary (|a+b-1| = " +
                                                 gap.toString(3) + ")");
    }
    out.rawPoly = seriesPolynomial(out.a, jets.w, t0);

    BigReal scale(ctx);
    for (const auto& c : out.rawPoly) scale = max(scale, abs(c));
    std::vector<BigReal> coeffs;
    for (const auto& c : out.rawPoly) coeffs.push_back(realPart(c, scale, id + " polynomial"));
    std::size_t ref = 0;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (abs(coeffs[i]) > abs(coeffs[ref])) ref = i;
    }
    const BigReal zeroTol = BigReal::pow10(ctx, -(ctx.digits() / 2));
    std::vector<QuadExt> poly;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const BigReal r = coeffs[i] / coeffs[ref];
        poly.push_back(abs(r) < zeroTol ? QuadExt(0)
                                        : identify(r, point.surd, id + " coefficient " + std::to_string(i)));
    }
    // sum u_n p(n) [P_n] t^n = const/(2 pi) with p = coeffs[ref] * poly.
    const BigReal rhsTimesPi = legendreConstant(sigma, ctx) / (2 * coeffs[ref]);
    const QuadExt rhs = identify(rhsTimesPi, point.surd, id + " right-hand side");

    SeriesSpec spec;
    try {
        spec = baseSeries(chain, point);
    } catch (const DomainError& e) {
        throw PipelineError("identify", id + ": " + e.what());
    }
    spec.id = id;
    spec.title = "rediscovered from the " + chain.name + " chain at k=" + k.toString();
    spec.poly = PolyQ(poly);
    spec.rhs = overPi(rhs);
    out.spec = normalize(spec);

    out.report = verifyNoThrow(out.spec, ctx);
    if (!out.report.pass) {
        throw PipelineError("verify", id + ": " +
                                          (out.report.error.empty() ? "error " + out.report.absError.toString(3)
                                                                    : out.report.error));
    }
    return out;
}

std::vector<BilinearEK> placeholderTower(const ChainJets& jets, const Rational& sigma, int order) {
    const auto pa = fundamentalMatrix(jets.ma, sigma);
    const auto pb = fundamentalMatrix(jets.mb, sigma);
    const auto& ctx = jets.ma.context();
    // K(a) = X, E(a) = X^4, K(b) = X^2, E(b) = X^8, so the product of the
    // propagated values is u (c_KK + c_EK u + c_KE u^2 + c_EE u^3), u = X^3.
    const long xs[4] = {2, 3, 5, 7};
    std::vector<std::vector<BigComplex>> vals;  // vals[sample][i]
    std::vector<BigComplex> us;
    for (long X : xs) {
        const BigComplex bx(ctx, X);
        const Jet ka = pa[0][0] * bx + pa[0][1] * pow(bx, 4);
        const Jet kb = pb[0][0] * pow(bx, 2) + pb[0][1] * pow(bx, 8);
        const Jet g = ka * kb;
        const BigComplex u = pow(bx, 3);
        std::vector<BigComplex> row;
        for (int i = 0; i <= order; ++i) row.push_back(g.derivative(i) / u);
        vals.push_back(row);
        us.push_back(u);
    }
    std::vector<std::vector<BigComplex>> vander(4);
    for (int r = 0; r < 4; ++r) {
        for (int p = 0; p < 4; ++p) vander[r].push_back(pow(us[r], static_cast<long>(p)));
    }
    std::vector<BilinearEK> out;
    for (int i = 0; i <= order; ++i) {
        std::vector<BigComplex> rhs;
        for (int r = 0; r < 4; ++r) rhs.push_back(vals[r][i]);
        const auto c = solveLinear(vander, rhs);
        BilinearEK e;
        e.c[0][0] = c[0];
        e.c[1][0] = c[1];
        e.c[0][1] = c[2];
        e.c[1][1] = c[3];
        out.push_back(std::move(e));
    }
    return out;
}

XCheck xSubstitutionCheck(const TransformChain& chain, const ChainPoint& point,
                          const PrecisionContext& ctx) {
    std::optional<BigComplex> x;
    if (point.legendreArg) x = complexNumeric(*point.legendreArg, ctx);
    const auto jets = chainJets(chain, complexNumeric(point.z0, ctx), x, 4);
    const Rational sigma = finalSigma(chain);
    const auto target = legendreTarget(ctx);
    const auto a = solveA(derivTower(jets, sigma, 3), target);
    const auto b = solveA(placeholderTower(jets, sigma, 3), target);
    XCheck r;
    r.difference = BigReal(ctx);
    for (int i = 0; i < 4; ++i) r.difference = max(r.difference, abs(a[i] - b[i]));
    r.pass = r.difference < BigReal::pow10(ctx, -(ctx.digits() / 2));
    return r;
}

}  // namespace pirel
