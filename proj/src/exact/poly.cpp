#include "pirel/exact/poly.hpp"

#include <algorithm>

namespace pirel {

PolyQ::PolyQ(std::vector<QuadExt> coefficients) : c_(std::move(coefficients)) { trim(); }

void PolyQ::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

bool PolyQ::isRational() const {
    return std::all_of(c_.begin(), c_.end(), [](const QuadExt& q) { return q.isRational(); });
}

PolyQ& PolyQ::operator+=(const PolyQ& r) {
    if (r.c_.size() > c_.size()) c_.resize(r.c_.size());
    for (std::size_t i = 0; i < r.c_.size(); ++i) c_[i] += r.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& r) {
    if (r.c_.size() > c_.size()) c_.resize(r.c_.size());
    for (std::size_t i = 0; i < r.c_.size(); ++i) c_[i] -= r.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& r) {
    if (isZero() || r.isZero()) {
        c_.clear();
        return *this;
    }
    std::vector<QuadExt> out(c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += c_[i] * r.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const QuadExt& r) {
    for (auto& c : c_) c *= r;
    trim();
    return *this;
}

std::string PolyQ::toString(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].isZero()) continue;
        std::string c = c_[i].toString();
        const bool compound = !c_[i].isRational() && !c_[i].a().isZero();
        if (compound) c = "(" + c + ")";
        std::string term;
        if (i == 0) {
            term = c;
        } else {
            const std::string power = i == 1 ? var : var + "^" + std::to_string(i);
            if (c == "1") {
                term = power;
            } else if (c == "-1") {
                term = "-" + power;
            } else {
                term = c + "*" + power;
            }
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

QuadExt qeval(const PolyQ& p, const Rational& k) { return qeval(p, QuadExt(k)); }

QuadExt qeval(const PolyQ& p, const QuadExt& k) {
    QuadExt acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * k + *it;
    return acc;
}

}  // namespace pirel
