#include "pirel/numerics/big_real.hpp"

#include <cmath>
#include <string>

#include "pirel/errors.hpp"
#include "pirel/exact/big_int.hpp"
#include "pirel/exact/rational.hpp"

namespace pirel {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

void requireLive(const PrecisionContext& ctx) {
    if (ctx.isNull()) throw PrecisionMismatch("arithmetic on an unassigned BigReal");
}
}  // namespace

BigReal::BigReal() { mpfr_init2(value_, MPFR_PREC_MIN); }

BigReal::BigReal(const PrecisionContext& ctx) : ctx_(ctx) {
    mpfr_init2(value_, ctx.bits());
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const PrecisionContext& ctx, long value) : ctx_(ctx) {
    mpfr_init2(value_, ctx.bits());
    mpfr_set_si(value_, value, kRnd);
}

BigReal::BigReal(const PrecisionContext& ctx, const BigInt& value) : ctx_(ctx) {
    mpfr_init2(value_, ctx.bits());
    mpfr_set_z(value_, value.mpz().get_mpz_t(), kRnd);
}

BigReal::BigReal(const PrecisionContext& ctx, const Rational& value) : ctx_(ctx) {
    mpfr_init2(value_, ctx.bits());
    mpfr_set_q(value_, value.mpq().get_mpq_t(), kRnd);
}

BigReal BigReal::parse(const PrecisionContext& ctx, std::string_view text) {
    BigReal r(ctx);
    const std::string s(text);
    char* end = nullptr;
    mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd);
    if (s.empty() || end == s.c_str() || *end != '\0') {
        throw DomainError("not a decimal number: '" + s + "'");
    }
    return r;
}

BigReal BigReal::fromDouble(const PrecisionContext& ctx, double value) {
    BigReal r(ctx);
    mpfr_set_d(r.value_, value, kRnd);
    return r;
}

BigReal BigReal::pow10(const PrecisionContext& ctx, long exponent) {
    BigReal r(ctx, 10);
    if (exponent >= 0) {
        mpfr_pow_ui(r.value_, r.value_, static_cast<unsigned long>(exponent), kRnd);
    } else {
        mpfr_pow_si(r.value_, r.value_, exponent, kRnd);
    }
    return r;
}

BigReal::BigReal(const BigReal& other) : ctx_(other.ctx_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept : ctx_(other.ctx_) {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        ctx_ = other.ctx_;
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, kRnd);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        ctx_ = other.ctx_;
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::in(const PrecisionContext& ctx) const {
    BigReal r(ctx);
    mpfr_set(r.value_, value_, kRnd);
    return r;
}

void BigReal::requireSame(const BigReal& rhs) const {
    requireLive(ctx_);
    if (!(ctx_ == rhs.ctx_)) {
        throw PrecisionMismatch("BigReal contexts differ (" + std::to_string(ctx_.digits()) +
                                " vs " + std::to_string(rhs.ctx_.digits()) + " digits)");
    }
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
    requireSame(rhs);
    mpfr_add(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
    requireSame(rhs);
    mpfr_sub(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
    requireSame(rhs);
    mpfr_mul(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
    requireSame(rhs);
    if (rhs.isZero()) throw DomainError("division by zero");
    mpfr_div(value_, value_, rhs.value_, kRnd);
    return *this;
}

BigReal& BigReal::operator+=(long rhs) {
    requireLive(ctx_);
    mpfr_add_si(value_, value_, rhs, kRnd);
    return *this;
}

BigReal& BigReal::operator-=(long rhs) {
    requireLive(ctx_);
    mpfr_sub_si(value_, value_, rhs, kRnd);
    return *this;
}

BigReal& BigReal::operator*=(long rhs) {
    requireLive(ctx_);
    mpfr_mul_si(value_, value_, rhs, kRnd);
    return *this;
}

BigReal& BigReal::operator/=(long rhs) {
    requireLive(ctx_);
    if (rhs == 0) throw DomainError("division by zero");
    mpfr_div_si(value_, value_, rhs, kRnd);
    return *this;
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.value_, r.value_, kRnd);
    return r;
}

BigReal operator/(long lhs, const BigReal& rhs) {
    requireLive(rhs.ctx_);
    if (rhs.isZero()) throw DomainError("division by zero");
    BigReal r(rhs.ctx_);
    mpfr_si_div(r.value_, lhs, rhs.value_, kRnd);
    return r;
}

bool operator==(const BigReal& lhs, const BigReal& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
}

std::partial_ordering operator<=>(const BigReal& lhs, const BigReal& rhs) {
    if (mpfr_unordered_p(lhs.value_, rhs.value_) != 0) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigReal& lhs, long rhs) {
    return mpfr_number_p(lhs.value_) != 0 && mpfr_cmp_si(lhs.value_, rhs) == 0;
}

std::partial_ordering operator<=>(const BigReal& lhs, long rhs) {
    if (mpfr_nan_p(lhs.value_) != 0) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(lhs.value_, rhs);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

int BigReal::sign() const noexcept { return mpfr_sgn(value_); }
bool BigReal::isZero() const noexcept { return mpfr_zero_p(value_) != 0; }
bool BigReal::isFinite() const noexcept { return mpfr_number_p(value_) != 0; }
double BigReal::toDouble() const noexcept { return mpfr_get_d(value_, kRnd); }

double BigReal::log10Abs() const noexcept {
    if (isZero()) return -HUGE_VAL;
    if (!isFinite()) return HUGE_VAL;
    long exp2 = 0;
    const double mant = mpfr_get_d_2exp(&exp2, value_, kRnd);
    return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

BigInt BigReal::roundToInteger() const {
    if (!isFinite()) throw DomainError("cannot round a non-finite value");
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDNA);
    return BigInt(z);
}

std::string BigReal::toString(int significant) const {
    if (!isFinite()) return mpfr_nan_p(value_) != 0 ? "nan" : (sign() < 0 ? "-inf" : "inf");
    if (isZero()) return "0";
    if (significant < 1) significant = 1;
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), value_, kRnd);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string out;
    if (digits[0] == '-') {
        out = "-";
        digits.erase(0, 1);
    }
    out += digits[0];
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

std::string BigReal::toFixed(int decimals) const {
    if (decimals < 0) decimals = 0;
    char* raw = nullptr;
    const int n = mpfr_asprintf(&raw, "%.*RNf", decimals, value_);
    if (n < 0) throw std::runtime_error("formatting failed");
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigReal abs(const BigReal& x) {
    BigReal r(x);
    mpfr_abs(r.raw(), r.get(), kRnd);
    return r;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw DomainError("square root of a negative number");
    BigReal r(x);
    mpfr_sqrt(r.raw(), x.get(), kRnd);
    return r;
}

BigReal root(const BigReal& x, unsigned long n) {
    if (n == 0) throw DomainError("zeroth root");
    if (x.sign() < 0 && n % 2 == 0) throw DomainError("even root of a negative number");
    BigReal r(x);
    mpfr_rootn_ui(r.raw(), x.get(), n, kRnd);
    return r;
}

BigReal pow(const BigReal& x, long exponent) {
    if (x.isZero() && exponent < 0) throw DomainError("zero to a negative power");
    BigReal r(x);
    mpfr_pow_si(r.raw(), x.get(), exponent, kRnd);
    return r;
}

BigReal pow(const BigReal& x, const Rational& exponent) {
    if (exponent.isInteger()) return pow(x, exponent.num().toLong());
    if (x.sign() <= 0) throw DomainError("fractional power needs a positive base");
    const long q = exponent.den().toLong();
    return pow(root(x, static_cast<unsigned long>(q)), exponent.num().toLong());
}

BigReal exp(const BigReal& x) {
    BigReal r(x);
    mpfr_exp(r.raw(), x.get(), kRnd);
    return r;
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw DomainError("logarithm of a nonpositive number");
    BigReal r(x);
    mpfr_log(r.raw(), x.get(), kRnd);
    return r;
}

BigReal sin(const BigReal& x) {
    BigReal r(x);
    mpfr_sin(r.raw(), x.get(), kRnd);
    return r;
}

BigReal cos(const BigReal& x) {
    BigReal r(x);
    mpfr_cos(r.raw(), x.get(), kRnd);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    if (!(y.context() == x.context())) throw PrecisionMismatch("atan2 contexts differ");
    BigReal r(y.context());
    mpfr_atan2(r.raw(), y.get(), x.get(), kRnd);
    return r;
}

const BigReal& max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }
const BigReal& min(const BigReal& a, const BigReal& b) { return (b < a) ? b : a; }

bool agreeTo(const BigReal& a, const BigReal& b, int exponent) {
    return abs(a - b) < BigReal::pow10(a.context(), -exponent);
}

}  // namespace pirel
