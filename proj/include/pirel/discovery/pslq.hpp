#pragma once

#include <optional>
#include <vector>

#include "pirel/exact/big_int.hpp"
#include "pirel/numerics/big_real.hpp"

namespace pirel {

struct Relation {
    std::vector<BigInt> coefficients;
    /// |sum c_i x_i|.
    BigReal residual;
};

struct PslqResult {
    std::optional<Relation> relation;
    /// Every integer relation of the inputs has Euclidean norm at least this.
    BigReal normBound;
    long iterations = 0;
};

/// PSLQ with gamma = 2/sqrt(3). Returns the first relation whose residual
/// is below 10^-(digits/2) times the input norm and whose coefficients fit
/// in maxNormBits bits; no relation once the norm bound exceeds
/// 2^maxNormBits. Throws InconclusiveError when the precision runs out
/// first, and DomainError for fewer than two values.
PslqResult pslq(const std::vector<BigReal>& values, int maxNormBits);

}  // namespace pirel
