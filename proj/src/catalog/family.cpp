#include "pirel/catalog/family.hpp"

#include <array>
#include <utility>

#include "pirel/errors.hpp"

namespace pirel {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 10> kNames{{
    {FamilyTag::CentralBinomialSquared, "central-binomial-squared"},
    {FamilyTag::PochS, "poch-s"},
    {FamilyTag::QuadBinom, "quad-binom"},
    {FamilyTag::Guic3A, "guic3-a"},
    {FamilyTag::Guic3B, "guic3-b"},
    {FamilyTag::Guic3C, "guic3-c"},
    {FamilyTag::Bailey2, "bailey2"},
    {FamilyTag::Quarter4, "quarter4"},
    {FamilyTag::Rama3, "rama3"},
    {FamilyTag::RamaS, "rama-s"},
}};

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

std::string_view tagName(FamilyTag tag) {
    for (const auto& [t, name] : kNames) {
        if (t == tag) return name;
    }
    return "unknown";
}

FamilyTag parseTag(std::string_view name) {
    for (const auto& [t, n] : kNames) {
        if (n == name) return t;
    }
    throw LoadError("unknown term family '" + std::string(name) + "'");
}

bool tagUsesS(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::PochS:
        case FamilyTag::Guic3A:
        case FamilyTag::Guic3B:
        case FamilyTag::Guic3C:
        case FamilyTag::RamaS:
            return true;
        default:
            return false;
    }
}

Rational TermFamily::scale() const {
    switch (tag) {
        case FamilyTag::CentralBinomialSquared: return q(16);
        case FamilyTag::QuadBinom: return q(1024);
        case FamilyTag::Bailey2: return q(4);
        case FamilyTag::Quarter4: return q(1, 256);
        default: return q(1);
    }
}

std::vector<Rational> TermFamily::upper() const {
    const Rational sv = s.value_or(Rational(0));
    switch (tag) {
        case FamilyTag::CentralBinomialSquared: return {q(1, 2), q(1, 2)};
        case FamilyTag::PochS: return {sv, 1 - sv};
        case FamilyTag::QuadBinom: return {q(1, 4), q(1, 4), q(3, 4), q(3, 4)};
        case FamilyTag::Guic3A:
        case FamilyTag::Guic3B: return {sv, sv, 1 - sv, 1 - sv};
        case FamilyTag::Guic3C: return {sv, sv, -sv, -sv};
        case FamilyTag::Bailey2: return {q(1, 4), q(1, 4), q(1, 4), q(3, 4)};
        case FamilyTag::Quarter4: return {q(1, 4), q(1, 4), q(1, 4)};
        case FamilyTag::Rama3: return {q(1, 2), q(1, 2), q(1, 2)};
        case FamilyTag::RamaS: return {sv, q(1, 2), 1 - sv};
    }
    return {};
}

std::vector<Rational> TermFamily::lower() const {
    switch (tag) {
        case FamilyTag::CentralBinomialSquared:
        case FamilyTag::PochS: return {q(1), q(1)};
        case FamilyTag::QuadBinom:
        case FamilyTag::Guic3A:
        case FamilyTag::Guic3C: return {q(1, 2), q(1), q(1), q(1)};
        case FamilyTag::Guic3B: return {q(3, 2), q(1), q(1), q(1)};
        case FamilyTag::Bailey2: return {q(1), q(1), q(1, 2), q(1, 2)};
        case FamilyTag::Quarter4: return {q(1), q(1, 2), q(3, 4)};
        case FamilyTag::Rama3:
        case FamilyTag::RamaS: return {q(1), q(1), q(1)};
    }
    return {};
}

Rational TermFamily::divisorAt(long n) const {
    if (divisor.isZero()) return Rational(1);
    return qeval(divisor, Rational(n)).rational();
}

Rational TermFamily::exactTerm(long n) const {
    if (n < 0) throw DomainError("term index must be nonnegative");
    const auto up = upper();
    const auto lo = lower();
    const Rational c = scale();
    Rational u(1);
    for (long k = 0; k < n; ++k) {
        Rational r = c;
        for (const auto& a : up) r *= a + Rational(k);
        for (const auto& b : lo) r /= b + Rational(k);
        u *= r;
    }
    return u / divisorAt(n);
}

void TermFamily::validate() const {
    if (tagUsesS(tag) && !s) {
        throw DomainError(std::string(tagName(tag)) + " needs a parameter s");
    }
    if (!tagUsesS(tag) && s) {
        throw DomainError(std::string(tagName(tag)) + " takes no parameter s");
    }
    if (divisor.isZero()) return;
    if (!divisor.isRational()) throw DomainError("divisor coefficients must be rational");
    // Every root lies inside the Cauchy bound 1 + max |c_i / c_lead|.
    Rational lead = divisor.coeff(static_cast<std::size_t>(divisor.degree())).rational();
    Rational bound(0);
    for (const auto& c : divisor.coefficients()) bound += abs(c.rational() / lead);
    const long limit = static_cast<long>(bound.toDouble()) + 2;
    for (long n = 0; n <= limit; ++n) {
        if (divisorAt(n).isZero()) {
            throw DomainError("divisor vanishes at n = " + std::to_string(n));
        }
    }
}

}  // namespace pirel
