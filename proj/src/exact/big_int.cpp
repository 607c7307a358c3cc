#include "pirel/exact/big_int.hpp"

#include <cctype>
#include <cmath>

#include "pirel/errors.hpp"

namespace pirel {

BigInt BigInt::parse(std::string_view text) {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw DomainError("not an integer: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw DomainError("not an integer: '" + s + "'");
        }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(mpz_class(s, 10));
}

long BigInt::toLong() const {
    if (!fitsLong()) throw DomainError("integer does not fit in a machine word: " + toString());
    return v_.get_si();
}

std::size_t BigInt::bitLength() const noexcept {
    if (isZero()) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

double BigInt::log10Abs() const noexcept {
    if (isZero()) return -HUGE_VAL;
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v_.get_mpz_t());
    return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

BigInt abs(const BigInt& x) { return BigInt(mpz_class(::abs(x.mpz()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt(r);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt(r);
}

BigInt exactQuotient(const BigInt& a, const BigInt& b) {
    if (b.isZero()) throw DomainError("integer division by zero");
    mpz_class r;
    mpz_tdiv_q(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt(r);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
    return BigInt(r);
}

bool isPerfectSquare(const BigInt& x) {
    return x.sign() >= 0 && mpz_perfect_square_p(x.mpz().get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& x) {
    if (x.sign() < 0) throw DomainError("square root of a negative integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.mpz().get_mpz_t());
    return BigInt(r);
}

SquarefreeSplit squarefreeSplit(const BigInt& n) {
    if (n.sign() <= 0) throw DomainError("squarefree split needs a positive integer");
    mpz_class rest = n.mpz();
    mpz_class square = 1;
    mpz_class core = 1;
    for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > rest) break;
        unsigned count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
        if (count % 2 == 1) core *= p;
    }
    if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        square *= r;
    } else {
        core *= rest;
    }
    return {BigInt(square), BigInt(core)};
}

}  // namespace pirel
