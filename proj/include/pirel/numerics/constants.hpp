#pragma once

#include "pirel/numerics/big_real.hpp"

namespace pirel {

/// K(1/√2).
BigReal kSqrt2(const PrecisionContext& ctx);
/// K(k3) with the third singular modulus k3 = (√3-1)/(2√2).
BigReal kSingular3(const PrecisionContext& ctx);

/// Γ(1/4) from Γ(1/4)^2 = 4√π K(1/√2).
BigReal gammaQuarterConst(const PrecisionContext& ctx);
/// Γ(1/3) from Γ(1/3)^3 = 2^(7/3) π K(k3) / 3^(1/4).
BigReal gammaThirdConst(const PrecisionContext& ctx);

}  // namespace pirel
