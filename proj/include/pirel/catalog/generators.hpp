#pragma once

#include <vector>

#include "pirel/catalog/series_spec.hpp"
#include "pirel/exact/rational.hpp"

namespace pirel {

/// Parameterized families. Each returns the raw theorem data: poly holds
/// (C0, C1, C2, C3) and rhs the stated right-hand side, with no rescaling.
/// All throw DomainError outside the stated parameter range.

/// Binomial-squared series with P_n, 0 < k < 1.
SeriesSpec genThm1(const Rational& k);
/// Binomial-squared series with negative z0, (√41-5)/8 < k < 1; rhs has √k.
SeriesSpec genThm2(const Rational& k);
/// (1/4)_n (3/4)_n series, 0 < k < 1, k != 1/3.
SeriesSpec genThm3(const Rational& k);
/// (1/3)_n (2/3)_n series, 0 < k < 1; rhs has √3.
SeriesSpec genThm4(const Rational& k);
/// The three equal 4F3-type sums with value sin(πs)/π, 0 < s < 1, s != 1/2.
std::vector<SeriesSpec> genGuic3(const Rational& s);

/// Rate of the genThm1 family, (1-2k+6k³-k⁴)/(1+k)² + 4 (k(1-k)/(1+k))^(3/2).
BigReal thm1RateFormula(const BigReal& k);
/// Rate of the genThm4 family, (1+k+k²)(1-2k+4k²)²/(1+2k)³.
Rational thm4RateFormula(const Rational& k);

/// Scale λ that makes poly (and polyPrev) a primitive integer polynomial
/// in its rational and surd parts, signed so that λ·rhs > 0.
Rational normalizationScale(const SeriesSpec& spec);
/// Display form: x made nonnegative (z0 -> (-1)^stride z0), then poly,
/// polyPrev and rhs multiplied by normalizationScale.
SeriesSpec normalize(const SeriesSpec& spec);

}  // namespace pirel
