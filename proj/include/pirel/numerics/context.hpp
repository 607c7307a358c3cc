#pragma once

#include <mpfr.h>

namespace pirel {

/// Requested decimal digits plus guard digits. Every value built in a
/// context carries at least `digits() + guard()` working decimal digits.
///
/// The default-constructed context is the null context; values holding it
/// have not been assigned yet and refuse arithmetic.
class PrecisionContext {
public:
    PrecisionContext() = default;
    explicit PrecisionContext(int digits);
    PrecisionContext(int digits, int guard);

    /// 20 + ceil(digits / 10).
    static int minimumGuard(int digits) noexcept { return 20 + (digits + 9) / 10; }

    int digits() const noexcept { return digits_; }
    int guard() const noexcept { return guard_; }
    int workingDigits() const noexcept { return digits_ + guard_; }
    mpfr_prec_t bits() const noexcept;
    bool isNull() const noexcept { return digits_ == 0; }

    /// Context for `digits() + extra` requested digits.
    PrecisionContext widened(int extra) const;

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    int digits_ = 0;
    int guard_ = 0;
};

}  // namespace pirel
