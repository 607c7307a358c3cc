#pragma once

#include <vector>

#include "pirel/catalog/series_spec.hpp"
#include "pirel/discovery/tower.hpp"
#include "pirel/evaluator/verify.hpp"

namespace pirel {

struct Rediscovery {
    SeriesSpec spec;
    /// Solved combination weights A_0..A_3.
    std::vector<BigComplex> a;
    /// Numeric cubic p(n) before identification, constant term first.
    std::vector<BigComplex> rawPoly;
    VerifyReport report;
};

/// derivTower -> solveA -> p(n) -> PSLQ identification over {1, sqrt(d)}
/// -> verify. Failures throw PipelineError tagged "point", "tower",
/// "complementary", "solve", "identify" or "verify".
Rediscovery rediscover(const TransformChain& chain, const Rational& k,
                       const PrecisionContext& ctx);

/// Polynomial p(n) = sum_j D_j z0^-j n(n-1)...(n-j+1), with
/// D_j = sum_{i>=j} A_i C(i,j) w^(i-j)(z0), turning sum_i A_i (w S)^(i)
/// into sum_n u_n p(n) [P_n(x)] z0^n.
std::vector<BigComplex> seriesPolynomial(const std::vector<BigComplex>& a, const Jet& w,
                                         const BigComplex& z0);

/// Coefficient grid of pi^2 G^(i) recovered by the placeholder method:
/// K(a), K(b), E(a), E(b) set to X, X^2, X^4, X^8, products read off as
/// powers of u = X^3 at X in {2, 3, 5, 7}.
std::vector<BilinearEK> placeholderTower(const ChainJets& jets, const Rational& sigma,
                                         int order = 3);

struct XCheck {
    bool pass = false;
    /// max_i |A_i(placeholder) - A_i(bilinear)|.
    BigReal difference;
};

/// Solves with the placeholder tower and compares the A_i with solveA on
/// the bilinear tower; passes when they agree to 10^-(digits/2).
XCheck xSubstitutionCheck(const TransformChain& chain, const ChainPoint& point,
                          const PrecisionContext& ctx);

}  // namespace pirel
