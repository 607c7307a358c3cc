#pragma once

#include "pirel/exact/rational.hpp"
#include "pirel/numerics/big_real.hpp"

namespace pirel {

/// π by the Brent–Salamin (Gauss–Legendre) AGM iteration. Cached per context.
BigReal pi(const PrecisionContext& ctx);

/// Arithmetic-geometric mean of a, b > 0.
BigReal agm(const BigReal& a, const BigReal& b);

/// Complete elliptic integrals in the modulus x, 0 <= x < 1 (x = 1 allowed for E).
BigReal ellipK(const BigReal& x);
BigReal ellipE(const BigReal& x);

/// The same integrals in the parameter m = x^2, for any m < 1 (m <= 1 for E).
BigReal ellipKParam(const BigReal& m);
BigReal ellipEParam(const BigReal& m);

/// (π/2) 2F1(1/2-s, 1/2+s; 1; x^2) and (π/2) 2F1(-1/2-s, 1/2+s; 1; x^2),
/// for |x| < 1 and -1/2 < s < 1/2.
BigReal ellipKs(const Rational& s, const BigReal& x);
BigReal ellipEs(const Rational& s, const BigReal& x);

}  // namespace pirel
