#include "pirel/discovery/pslq.hpp"

#include <cmath>
#include <utility>

#include "pirel/errors.hpp"

namespace pirel {

namespace {

BigReal nint(const BigReal& v) { return BigReal(v.context(), v.roundToInteger()); }

}  // namespace

PslqResult pslq(const std::vector<BigReal>& values, int maxNormBits) {
    const std::size_t n = values.size();
    if (n < 2) throw DomainError("pslq needs at least two values");
    if (maxNormBits < 1) throw DomainError("pslq needs a positive norm cap");
    const PrecisionContext ctx = values[0].context();
    for (const auto& v : values) {
        if (v.context() != ctx) throw PrecisionMismatch("pslq values use different contexts");
    }

    BigReal norm2(ctx);
    for (const auto& v : values) norm2 += v * v;
    if (norm2.isZero()) throw DomainError("pslq input is the zero vector");
    const BigReal norm = sqrt(norm2);
    const BigReal threshold = norm * BigReal::pow10(ctx, -(ctx.digits() / 2));
    const BigReal cap = pow(BigReal(ctx, 2), static_cast<long>(maxNormBits));
    const BigReal floor = BigReal::pow10(ctx, -(ctx.workingDigits() - 5));
    const double maxEntryBits = ctx.workingDigits() * std::log2(10.0) - 10;
    const BigReal gamma = sqrt(BigReal(ctx, 4) / 3);

    std::vector<BigReal> y;
    for (const auto& v : values) y.push_back(v / norm);
    std::vector<BigReal> s(n, BigReal(ctx));
    {
        BigReal acc(ctx);
        for (std::size_t k = n; k-- > 0;) {
            acc += y[k] * y[k];
            s[k] = sqrt(acc);
        }
    }
    // H is n x (n-1), lower trapezoidal.
    std::vector<std::vector<BigReal>> h(n, std::vector<BigReal>(n - 1, BigReal(ctx)));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (s[j].isZero()) break;
        h[j][j] = s[j + 1] / s[j];
        for (std::size_t i = j + 1; i < n; ++i) h[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }
    // B accumulates the inverse transformations: y = x B.
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;

    auto reduceRow = [&](std::size_t i, std::size_t jmax) {
        for (std::size_t j = jmax + 1; j-- > 0;) {
            if (h[j][j].isZero()) continue;
            const BigReal tr = nint(h[i][j] / h[j][j]);
            if (tr.isZero()) continue;
            const BigInt t = tr.roundToInteger();
            y[j] += tr * y[i];
            for (std::size_t k = 0; k <= j; ++k) h[i][k] -= tr * h[j][k];
            for (std::size_t k = 0; k < n; ++k) b[k][j] += t * b[k][i];
        }
    };
    for (std::size_t i = 1; i < n; ++i) reduceRow(i, i - 1);

    auto relationAt = [&](std::size_t col) -> std::optional<Relation> {
        Relation rel;
        std::size_t bits = 0;
        bool nonzero = false;
        BigReal res(ctx);
        for (std::size_t k = 0; k < n; ++k) {
            rel.coefficients.push_back(b[k][col]);
            bits = std::max(bits, b[k][col].bitLength());
            nonzero = nonzero || !b[k][col].isZero();
            res += BigReal(ctx, b[k][col]) * values[k];
        }
        rel.residual = abs(res);
        if (!nonzero || bits > static_cast<std::size_t>(maxNormBits) || !(rel.residual < threshold)) {
            return std::nullopt;
        }
        // Canonical sign: first nonzero coefficient positive.
        for (const auto& c : rel.coefficients) {
            if (c.isZero()) continue;
            if (c.sign() < 0) {
                for (auto& d : rel.coefficients) d = -d;
            }
            break;
        }
        return rel;
    };

    const long maxIterations = 20000L * static_cast<long>(n);
    PslqResult result;
    result.normBound = BigReal(ctx);
    for (long iter = 1; iter <= maxIterations; ++iter) {
        result.iterations = iter;
        // Exchange step.
        std::size_t m = 0;
        BigReal best(ctx, -1);
        BigReal g = gamma;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const BigReal v = g * abs(h[i][i]);
            if (v > best) {
                best = v;
                m = i;
            }
            g *= gamma;
        }
        std::swap(y[m], y[m + 1]);
        std::swap(h[m], h[m + 1]);
        for (std::size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);
        if (m + 2 < n) {
            const BigReal t0 = sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
            const BigReal t1 = h[m][m] / t0;
            const BigReal t2 = h[m][m + 1] / t0;
            for (std::size_t i = m; i < n; ++i) {
                const BigReal t3 = h[i][m];
                const BigReal t4 = h[i][m + 1];
                h[i][m] = t1 * t3 + t2 * t4;
                h[i][m + 1] = t1 * t4 - t2 * t3;
            }
        }
        for (std::size_t i = m + 1; i < n; ++i) reduceRow(i, std::min(i - 1, m + 1));

        BigReal hmax(ctx);
        for (std::size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(h[j][j]));
        if (!hmax.isZero()) result.normBound = max(result.normBound, 1 / hmax);

        // A small entry of y marks a relation in the matching column of B.
        std::size_t smallest = 0;
        for (std::size_t j = 1; j < n; ++j) {
            if (abs(y[j]) < abs(y[smallest])) smallest = j;
        }
        if (abs(y[smallest]) < threshold) {
            if (auto rel = relationAt(smallest)) {
                result.relation = std::move(rel);
                return result;
            }
        }
        if (result.normBound > cap) return result;

        std::size_t entryBits = 0;
        for (const auto& row : b) {
            for (const auto& v : row) entryBits = std::max(entryBits, v.bitLength());
        }
        if (static_cast<double>(entryBits) > maxEntryBits || abs(y[smallest]) < floor) {
            throw InconclusiveError("pslq exhausted precision after " + std::to_string(iter) +
                                    " iterations (norm bound " + result.normBound.toString(4) + ")");
        }
    }
    throw InconclusiveError("pslq iteration cap reached (norm bound " +
                            result.normBound.toString(4) + ")");
}

}  // namespace pirel
