#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include "pirel/numerics/context.hpp"

namespace pirel {

class Rational;
class BigInt;

/// Arbitrary-precision real number tagged with the context it was built in.
///
/// Binary arithmetic requires both operands to share a context and throws
/// PrecisionMismatch otherwise; use `in()` to move a value between contexts.
/// All operations round to nearest.
class BigReal {
public:
    /// Null value; assign before use.
    BigReal();
    explicit BigReal(const PrecisionContext& ctx);
    BigReal(const PrecisionContext& ctx, long value);
    BigReal(const PrecisionContext& ctx, const BigInt& value);
    BigReal(const PrecisionContext& ctx, const Rational& value);

    /// Parses a decimal literal such as "3.14159" or "-2e-40".
    static BigReal parse(const PrecisionContext& ctx, std::string_view text);
    static BigReal fromDouble(const PrecisionContext& ctx, double value);
    /// 10^exponent.
    static BigReal pow10(const PrecisionContext& ctx, long exponent);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    const PrecisionContext& context() const noexcept { return ctx_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr raw() noexcept { return value_; }

    /// Copy rounded into another context.
    BigReal in(const PrecisionContext& ctx) const;

    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);
    BigReal& operator+=(long rhs);
    BigReal& operator-=(long rhs);
    BigReal& operator*=(long rhs);
    BigReal& operator/=(long rhs);
    BigReal operator-() const;

    friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
    friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
    friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
    friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
    friend BigReal operator+(BigReal lhs, long rhs) { return lhs += rhs; }
    friend BigReal operator-(BigReal lhs, long rhs) { return lhs -= rhs; }
    friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
    friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
    friend BigReal operator+(long lhs, BigReal rhs) { return rhs += lhs; }
    friend BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
    friend BigReal operator-(long lhs, const BigReal& rhs) { return -rhs + lhs; }
    friend BigReal operator/(long lhs, const BigReal& rhs);

    // Floating-point operands would silently truncate to long.
    template <std::floating_point F> BigReal& operator+=(F) = delete;
    template <std::floating_point F> BigReal& operator-=(F) = delete;
    template <std::floating_point F> BigReal& operator*=(F) = delete;
    template <std::floating_point F> BigReal& operator/=(F) = delete;
    template <std::floating_point F> friend BigReal operator+(BigReal, F) = delete;
    template <std::floating_point F> friend BigReal operator-(BigReal, F) = delete;
    template <std::floating_point F> friend BigReal operator*(BigReal, F) = delete;
    template <std::floating_point F> friend BigReal operator/(BigReal, F) = delete;
    template <std::floating_point F> friend BigReal operator*(F, BigReal) = delete;

    friend bool operator==(const BigReal& lhs, const BigReal& rhs);
    friend std::partial_ordering operator<=>(const BigReal& lhs, const BigReal& rhs);
    friend bool operator==(const BigReal& lhs, long rhs);
    friend std::partial_ordering operator<=>(const BigReal& lhs, long rhs);

    int sign() const noexcept;
    bool isZero() const noexcept;
    bool isFinite() const noexcept;
    double toDouble() const noexcept;
    /// log10 |x| as a double, valid far outside double's exponent range;
    /// -infinity for zero.
    double log10Abs() const noexcept;
    /// Nearest integer (ties away from zero).
    BigInt roundToInteger() const;

    /// Scientific notation with `significant` digits.
    std::string toString(int significant) const;
    /// Fixed notation with `decimals` digits after the point.
    std::string toFixed(int decimals) const;

private:
    void requireSame(const BigReal& rhs) const;

    PrecisionContext ctx_;
    mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
/// Real n-th root; x must be nonnegative for even n.
BigReal root(const BigReal& x, unsigned long n);
BigReal pow(const BigReal& x, long exponent);
/// x^(p/q) for x > 0.
BigReal pow(const BigReal& x, const Rational& exponent);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
const BigReal& max(const BigReal& a, const BigReal& b);
const BigReal& min(const BigReal& a, const BigReal& b);

/// |a - b| < 10^-exponent.
bool agreeTo(const BigReal& a, const BigReal& b, int exponent);

}  // namespace pirel
