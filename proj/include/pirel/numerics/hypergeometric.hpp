#pragma once

#include <vector>

#include "pirel/exact/rational.hpp"
#include "pirel/numerics/big_complex.hpp"
#include "pirel/numerics/big_real.hpp"

namespace pirel {

/// pFq(a; b; z) with rational parameters, summed until a geometric tail
/// bound drops below 10^-(digits + guard/2).
///
/// Requires p <= q + 1, and |z| < 1 when p = q + 1, unless some upper
/// parameter is a nonpositive integer (terminating series). A lower
/// parameter that is a nonpositive integer met before termination is a pole.
BigReal hypergeometric(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const BigReal& z);
BigComplex hypergeometric(const std::vector<Rational>& a, const std::vector<Rational>& b,
                          const BigComplex& z);

}  // namespace pirel
