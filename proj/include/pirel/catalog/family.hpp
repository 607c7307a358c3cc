#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pirel/exact/poly.hpp"
#include "pirel/exact/rational.hpp"

namespace pirel {

enum class FamilyTag {
    CentralBinomialSquared,  // binom(2n,n)^2
    PochS,                   // (s)_n (1-s)_n / n!^2
    QuadBinom,               // binom(4n,2n)^2 binom(2n,n)
    Guic3A,                  // (s)_n^2 (1-s)_n^2 / ((1/2)_n n!^3)
    Guic3B,                  // (s)_n^2 (1-s)_n^2 / ((3/2)_n n!^3)
    Guic3C,                  // (s)_n^2 (-s)_n^2 / ((1/2)_n n!^3)
    Bailey2,                 // binom(4n,2n) (1/4)_n^2 / (2n)!
    Quarter4,                // (1/4)_n^4 / (4n)!
    Rama3,                   // (1/2)_n^3 / n!^3
    RamaS,                   // (s)_n (1/2)_n (1-s)_n / n!^3
};

std::string_view tagName(FamilyTag tag);
/// Throws LoadError for an unknown name.
FamilyTag parseTag(std::string_view name);
bool tagUsesS(FamilyTag tag);

/// The arithmetic factor U(n) of a series, optionally divided by a
/// polynomial in n. Every family is a hypergeometric term
/// U(n) = C^n prod (a_i)_n / prod (b_j)_n with as many upper as lower
/// parameters, so U(n+1)/U(n) -> C.
struct TermFamily {
    FamilyTag tag = FamilyTag::CentralBinomialSquared;
    std::optional<Rational> s;
    /// Rational coefficients; the zero polynomial means no divisor.
    PolyQ divisor;

    Rational scale() const;
    std::vector<Rational> upper() const;
    std::vector<Rational> lower() const;

    /// U(n) / divisor(n), exactly.
    Rational exactTerm(long n) const;
    /// divisor(n), or 1 without a divisor.
    Rational divisorAt(long n) const;

    /// Throws DomainError if s is missing/superfluous or the divisor
    /// vanishes at some n >= 0 or has irrational coefficients.
    void validate() const;

    friend bool operator==(const TermFamily&, const TermFamily&) = default;
};

}  // namespace pirel
