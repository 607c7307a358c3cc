#include "pirel/exact/rational.hpp"

#include "pirel/errors.hpp"

namespace pirel {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.isZero()) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num.mpz(), den.mpz());
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::parse(text));
    const BigInt n = BigInt::parse(text.substr(0, slash));
    const std::string_view dtext = text.substr(slash + 1);
    if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+')) {
        throw DomainError("denominator must be unsigned: '" + std::string(text) + "'");
    }
    return Rational(n, BigInt::parse(dtext));
}

std::string Rational::toString() const {
    if (isInteger()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.isZero()) throw DomainError("rational division by zero");
    v_ /= r.v_;
    return *this;
}

Rational abs(const Rational& x) { return Rational(mpq_class(::abs(x.mpq()))); }

Rational inverse(const Rational& x) { return Rational(1) / x; }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(inverse(base), -exponent);
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(BigInt(n), BigInt(d));
}

}  // namespace pirel
