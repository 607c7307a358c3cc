#include "pirel/numerics/constants.hpp"

#include "pirel/exact/rational.hpp"
#include "pirel/numerics/elliptic.hpp"

namespace pirel {

BigReal kSqrt2(const PrecisionContext& ctx) { return ellipKParam(BigReal(ctx, Rational(1, 2))); }

BigReal kSingular3(const PrecisionContext& ctx) {
    // k3^2 = (2 - √3)/4.
    const BigReal m = (2 - sqrt(BigReal(ctx, 3))) / 4;
    return ellipKParam(m);
}

BigReal gammaQuarterConst(const PrecisionContext& ctx) {
    return sqrt(4 * sqrt(pi(ctx)) * kSqrt2(ctx));
}

BigReal gammaThirdConst(const PrecisionContext& ctx) {
    const BigReal cube = pow(BigReal(ctx, 2), Rational(7, 3)) * pi(ctx) * kSingular3(ctx) /
                         root(BigReal(ctx, 3), 4);
    return root(cube, 3);
}

}  // namespace pirel
