#pragma once

#include <utility>

namespace pirel {

/// P_n(x) by (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
/// T is Rational (exact), BigReal or BigComplex.
template <class T>
T legendreP(long n, const T& x) {
    T prev = x;
    prev *= 0;
    prev += 1;
    if (n == 0) return prev;
    T cur = x;
    for (long k = 1; k < n; ++k) {
        T next = x * cur;
        next *= 2 * k + 1;
        T back = prev;
        back *= k;
        next -= back;
        next /= k + 1;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace pirel
