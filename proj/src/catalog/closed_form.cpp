#include "pirel/catalog/closed_form.hpp"

#include <cmath>

#include "pirel/errors.hpp"
#include "pirel/numerics/constants.hpp"
#include "pirel/numerics/elliptic.hpp"

namespace pirel {

namespace {

// sin(π s) for s reduced into [0, 2), exactly, when it is a known surd.
std::optional<QuadExt> exactSinPi(const Rational& s) {
    const mpq_class half = s.mpq() / 2;
    mpz_class turns;
    mpz_fdiv_q(turns.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    Rational t = s - Rational(2) * Rational(BigInt(turns));
    int sgn = 1;
    if (t >= Rational(1)) {
        t -= Rational(1);
        sgn = -1;
    }
    if (t > Rational(1, 2)) t = Rational(1) - t;
    // t in [0, 1/2].
    QuadExt v;
    if (t.isZero()) {
        v = QuadExt(0);
    } else if (t == Rational(1, 2)) {
        v = QuadExt(1);
    } else if (t == Rational(1, 6)) {
        v = QuadExt(Rational(1, 2));
    } else if (t == Rational(1, 4)) {
        v = QuadExt(0, Rational(1, 2), 2);
    } else if (t == Rational(1, 3)) {
        v = QuadExt(0, Rational(1, 2), 3);
    } else {
        return std::nullopt;
    }
    return sgn < 0 ? -v : v;
}

std::string powerSuffix(int p) { return p == 1 ? "" : "^" + std::to_string(p); }

}  // namespace

ClosedForm overPi(const QuadExt& c) {
    ClosedForm cf;
    cf.coeff = c;
    cf.piPower = -1;
    return cf;
}

ClosedForm sinPiOverPi(const Rational& s) {
    if (auto v = exactSinPi(s)) return overPi(*v);
    ClosedForm cf = overPi(QuadExt(1));
    cf.sinPi = s;
    return cf;
}

int ClosedForm::sign() const {
    int sg = coeff.sign();
    if (sinPi) {
        const double v = std::sin(3.14159265358979323846 * sinPi->toDouble());
        sg *= v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    return sg;
}

void ClosedForm::validate() const {
    for (const auto& r : radicals) {
        if (r.index != 2 && r.index != 4) throw DomainError("radical index must be 2 or 4");
        if (r.base.sign() <= 0) throw DomainError("radical base must be positive");
        if (r.power == 0) throw DomainError("radical power must be nonzero");
    }
}

std::string ClosedForm::toString() const {
    std::vector<std::string> num;
    std::vector<std::string> den;
    auto put = [&](const std::string& f, int p) {
        if (p > 0) num.push_back(f + powerSuffix(p));
        if (p < 0) den.push_back(f + powerSuffix(-p));
    };
    for (const auto& r : radicals) {
        const std::string base = r.base.isRational() ? r.base.toString() : "(" + r.base.toString() + ")";
        const std::string f = r.index == 2 ? "sqrt(" + r.base.toString() + ")"
                                           : base + "^(1/" + std::to_string(r.index) + ")";
        put(f, r.power);
    }
    if (sinPi) num.push_back("sin(" + sinPi->toString() + "*pi)");
    put("pi", piPower);
    put("K(1/sqrt(2))", kSqrt2Power);
    put("K(k3)", k3Power);

    std::string c = coeff.toString();
    std::string out;
    const bool sum = !coeff.isRational() && !coeff.a().isZero();
    if (num.empty()) {
        out = sum && !den.empty() ? "(" + c + ")" : c;
    } else {
        if (sum) c = "(" + c + ")";
        out = c == "1" ? "" : (c == "-1" ? "-" : c + "*");
        for (std::size_t i = 0; i < num.size(); ++i) out += (i ? "*" : "") + num[i];
    }
    if (!den.empty()) {
        out += "/";
        if (den.size() > 1) out += "(";
        for (std::size_t i = 0; i < den.size(); ++i) out += (i ? "*" : "") + den[i];
        if (den.size() > 1) out += ")";
    }
    return out;
}

BigReal evalClosedForm(const ClosedForm& cf, const PrecisionContext& ctx) {
    cf.validate();
    BigReal v = surdNumeric(cf.coeff, ctx);
    if (cf.piPower != 0) v *= pow(pi(ctx), cf.piPower);
    for (const auto& r : cf.radicals) {
        BigReal f = sqrt(surdNumeric(r.base, ctx));
        if (r.index == 4) f = sqrt(f);
        v *= pow(f, r.power);
    }
    if (cf.kSqrt2Power != 0) v *= pow(kSqrt2(ctx), cf.kSqrt2Power);
    if (cf.k3Power != 0) v *= pow(kSingular3(ctx), cf.k3Power);
    if (cf.sinPi) v *= sin(pi(ctx) * BigReal(ctx, *cf.sinPi));
    return v;
}

}  // namespace pirel
