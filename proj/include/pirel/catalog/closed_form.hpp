#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pirel/exact/quad_ext.hpp"
#include "pirel/numerics/big_real.hpp"

namespace pirel {

/// base^(power/index) for a positive QuadExt base, index 2 or 4.
struct Radical {
    QuadExt base;
    int index = 2;
    int power = 1;
    friend bool operator==(const Radical&, const Radical&) = default;
};

/// A product
///   coeff * π^piPower * Π radicals * K(1/√2)^kSqrt2Power * K(k3)^k3Power * sin(π s)
/// where the sine factor is present only when `sinPi` is set. Γ(1/4) and
/// Γ(1/3) enter only through the two K values.
struct ClosedForm {
    QuadExt coeff{1};
    int piPower = 0;
    std::vector<Radical> radicals;
    int kSqrt2Power = 0;
    int k3Power = 0;
    std::optional<Rational> sinPi;

    /// Sign of the exact value (radicals and K values are positive).
    int sign() const;
    /// Readable form such as "2160/pi" or "8*sqrt(2)/pi".
    std::string toString() const;
    /// Throws DomainError for a nonpositive radical base or unsupported index.
    void validate() const;

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// c / π.
ClosedForm overPi(const QuadExt& c);
/// sin(π s)/π; reduced to surds when the denominator of s is 1, 2, 3, 4 or 6.
ClosedForm sinPiOverPi(const Rational& s);

BigReal evalClosedForm(const ClosedForm& cf, const PrecisionContext& ctx);

}  // namespace pirel
