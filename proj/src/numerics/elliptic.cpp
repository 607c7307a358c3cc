#include "pirel/numerics/elliptic.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "pirel/errors.hpp"
#include "pirel/numerics/hypergeometric.hpp"

namespace pirel {

namespace {

constexpr int kMaxAgmSteps = 200;

// AGM-type iterations stop once a and b agree to within 2^8 ulps.
bool converged(const BigReal& a, const BigReal& b) {
    const BigReal diff = abs(a - b);
    if (diff.isZero()) return true;
    const long bits = static_cast<long>(a.context().bits());
    return diff.log10Abs() - abs(a).log10Abs() < -0.30103 * static_cast<double>(bits - 8);
}

BigReal computePi(const PrecisionContext& ctx) {
    BigReal a(ctx, 1);
    BigReal b = 1 / sqrt(BigReal(ctx, 2));
    BigReal t = BigReal(ctx, 1) / 4;
    BigReal p(ctx, 1);
    for (int i = 0; i < kMaxAgmSteps && !converged(a, b); ++i) {
        BigReal next = (a + b) / 2;
        b = sqrt(a * b);
        const BigReal d = a - next;
        t -= p * d * d;
        a = std::move(next);
        p *= 2;
    }
    const BigReal s = a + b;
    return s * s / (t * 4);
}

}  // namespace

BigReal pi(const PrecisionContext& ctx) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, BigReal> cache;
    const auto key = std::make_pair(ctx.digits(), ctx.guard());
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BigReal value = computePi(ctx);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, value);
    return value;
}

BigReal agm(const BigReal& a0, const BigReal& b0) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw DomainError("agm needs positive arguments");
    BigReal a = a0;
    BigReal b = b0;
    for (int i = 0; i < kMaxAgmSteps && !converged(a, b); ++i) {
        BigReal next = (a + b) / 2;
        b = sqrt(a * b);
        a = std::move(next);
    }
    return (a + b) / 2;
}

BigReal ellipKParam(const BigReal& m) {
    if (m >= 1) throw DomainError("K needs parameter m < 1");
    const PrecisionContext& ctx = m.context();
    return pi(ctx) / (agm(BigReal(ctx, 1), sqrt(1 - m)) * 2);
}

BigReal ellipEParam(const BigReal& m) {
    if (m > 1) throw DomainError("E needs parameter m <= 1");
    const PrecisionContext& ctx = m.context();
    if (m == 1) return BigReal(ctx, 1);
    // E = K (1 - sum_{n>=0} 2^(n-1) c_n^2), c_0^2 = m, c_{n+1} = (a_n - b_n)/2.
    BigReal a(ctx, 1);
    BigReal b = sqrt(1 - m);
    BigReal sum = m / 2;
    BigReal weight(ctx, 1);
    for (int i = 0; i < kMaxAgmSteps && !converged(a, b); ++i) {
        const BigReal c = (a - b) / 2;
        BigReal next = (a + b) / 2;
        b = sqrt(a * b);
        a = std::move(next);
        sum += weight * c * c;
        weight *= 2;
    }
    const BigReal k = pi(ctx) / ((a + b) / 2 * 2);
    return k * (1 - sum);
}

BigReal ellipK(const BigReal& x) {
    if (x.sign() < 0 || x >= 1) throw DomainError("K needs modulus 0 <= x < 1");
    return ellipKParam(x * x);
}

BigReal ellipE(const BigReal& x) {
    if (x.sign() < 0 || x > 1) throw DomainError("E needs modulus 0 <= x <= 1");
    return ellipEParam(x * x);
}

namespace {
void checkGeneralized(const Rational& s, const BigReal& x) {
    if (s <= Rational(-1, 2) || s >= Rational(1, 2)) {
        throw DomainError("generalized K/E need -1/2 < s < 1/2");
    }
    if (abs(x) >= 1) throw DomainError("generalized K/E need |x| < 1");
}
}  // namespace

BigReal ellipKs(const Rational& s, const BigReal& x) {
    checkGeneralized(s, x);
    const Rational half(1, 2);
    return pi(x.context()) / 2 * hypergeometric({half - s, half + s}, {Rational(1)}, x * x);
}

BigReal ellipEs(const Rational& s, const BigReal& x) {
    checkGeneralized(s, x);
    const Rational half(1, 2);
    return pi(x.context()) / 2 * hypergeometric({-half - s, half + s}, {Rational(1)}, x * x);
}

}  // namespace pirel
