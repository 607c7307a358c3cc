#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pirel/catalog/series_spec.hpp"
#include "pirel/discovery/jet.hpp"

namespace pirel {

/// Where the factorisation pi^2 G = K K starts from.
enum class BaseKind {
    /// sum (s)_n (1-s)_n / n!^2 P_n(x) z^n = F(alpha) F(beta), variable z.
    Brafman,
    /// 4F3(s,s,1-s,1-s; 1/2,1,1; y) = F(u) F(u/(u-1)) with
    /// y = -u^2/(4(1-u)), variable y, u = 2y + 2i sqrt(y(1-y)).
    Bailey,
    /// 3F2(1/2,1/2,1/2; 1,1; 4x^2(1-x^2)) = F(x^2)^2, variable x.
    Clausen,
};

/// Argument maps applied to one 2F1 factor F(a, 1-a; 1; m). Each rewrites
/// it as prefactor(m) times a factor with a new parameter pair.
enum class StepKind {
    Quadratic,      // (1/2,1/2): m -> 4 sqrt(m)/(1+sqrt(m))^2, prefactor 1/(1+sqrt(m))
    Euler,          // (1/2,1/2): m -> m/(m-1), prefactor (1-m)^(-1/2)
    QuarterHalf,    // (1/4,3/4) -> (1/2,1/2): m -> 2 sqrt(m)/(1+sqrt(m))
    QuarterHalfAlt, // (1/4,3/4) -> (1/2,1/2): m -> (1-r)/(1+r), r = sqrt(1-m)
    Goursat13,      // (1/3,2/3) -> (1/6,5/6): t -> 1/2 - (1-20t-8t^2)/(2(1+8t)^(3/2))
};

std::string_view stepName(StepKind k);

struct TransformChain {
    std::string name;
    BaseKind base = BaseKind::Brafman;
    /// Pochhammer parameter of the base factors F(s, 1-s; 1; .).
    Rational s;
    std::vector<StepKind> left;
    std::vector<StepKind> right;
};

/// The supported chains: thm1, thm2, thm3, thm4, guic1, clausen.
const std::vector<TransformChain>& chains();
/// Throws NotFoundError.
const TransformChain& chainByName(std::string_view name);

/// sigma of the final factors, which are (pi/2)^-1 K_sigma / E_sigma; the
/// Legendre-type constant is cos(pi sigma)/(1 + 2 sigma).
Rational finalSigma(const TransformChain& chain);

/// A complementary point of a chain at parameter k, with exact data.
struct ChainPoint {
    /// Base variable value (z for Brafman, y for Bailey, x for Clausen).
    ExactComplex z0;
    /// Legendre argument for Brafman chains.
    std::optional<ExactComplex> legendreArg;
    /// Radicand of the surds expected in the identified coefficients.
    BigInt surd{1};
};

/// Closed-form complementary point. Throws PipelineError("point") when
/// the chain has none at k.
ChainPoint chainPoint(const TransformChain& chain, const Rational& k);

/// Jets of the final parameters ma, mb (arguments of K in the parameter
/// m = modulus^2) and of w = 1/(4 pa pb), where pa, pb are the accumulated
/// prefactors, so that pi^2 w S = K_sigma(ma) K_sigma(mb) with S the base
/// series in the chain variable.
struct ChainJets {
    Jet ma;
    Jet mb;
    Jet w;
};

/// Throws DomainError when a parameter hits 0 or 1 at the base point.
ChainJets chainJets(const TransformChain& chain, const BigComplex& z0,
                    const std::optional<BigComplex>& legendreArg, int length);

/// The base series sum_n u_n [P_n(x)] t^n as a SeriesSpec with poly = 1
/// in the catalog's family conventions: family, stride and x, and
/// z0 = t / C where C is the family scale. Brafman and Bailey chains only.
SeriesSpec baseSeries(const TransformChain& chain, const ChainPoint& point);

}  // namespace pirel
