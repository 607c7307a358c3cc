#include "pirel/numerics/context.hpp"

#include <cmath>
#include <string>

#include "pirel/errors.hpp"

namespace pirel {

PrecisionContext::PrecisionContext(int digits) : PrecisionContext(digits, minimumGuard(digits)) {}

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
    if (digits <= 0) {
        throw DomainError("precision context needs a positive digit count, got " +
                          std::to_string(digits));
    }
    if (guard < minimumGuard(digits)) {
        throw DomainError("guard digits " + std::to_string(guard) + " below minimum " +
                          std::to_string(minimumGuard(digits)));
    }
}

mpfr_prec_t PrecisionContext::bits() const noexcept {
    if (isNull()) return MPFR_PREC_MIN;
    // log2(10) = 3.32192809...; a few spare bits cover the decimal rounding.
    return static_cast<mpfr_prec_t>(std::ceil(workingDigits() * 3.3219280948873623)) + 8;
}

PrecisionContext PrecisionContext::widened(int extra) const {
    if (extra <= 0) return *this;
    return PrecisionContext(digits_ + extra);
}

}  // namespace pirel
