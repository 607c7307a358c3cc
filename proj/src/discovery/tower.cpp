#include "pirel/discovery/tower.hpp"

#include <algorithm>

#include "pirel/errors.hpp"

namespace pirel {

namespace {

BigComplex cr(const PrecisionContext& ctx, const Rational& r) { return BigComplex(BigReal(ctx, r)); }

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::array<BigComplex, 4> BilinearEK::flat() const {
    return {c[0][0], c[1][0], c[0][1], c[1][1]};
}

std::array<std::array<Jet, 2>, 2> fundamentalMatrix(const Jet& m, const Rational& sigma) {
    const auto& ctx = m.context();
    const int n = m.length();
    // F = 2F1(a, b; 1; m) and F^ = 2F1(a-1, b; 1; m) with a = 1/2 - sigma, b = 1/2 + sigma:
    //   dF/dm  = [((1-a) F^ + (2a-1 + (b-a) m) F)/(1-m) - a F]/m
    //   dF^/dm = (a-1)(F - F^)/m
    const Rational a = Rational(1, 2) - sigma;
    const Rational b = Rational(1, 2) + sigma;
    const Jet invM = inverse(m);
    const Jet inv1M = inverse(1 - m);
    const Jet dm = derivative(m);
    const Jet lin = m * cr(ctx, b - a) + Jet(cr(ctx, 2 * a - 1), n);
    std::array<std::array<Jet, 2>, 2> coef = {{
        {dm * ((lin * inv1M - Jet(cr(ctx, a), n)) * invM), dm * (inv1M * invM * cr(ctx, 1 - a))},
        {dm * (invM * cr(ctx, a - 1)), dm * (invM * cr(ctx, 1 - a))},
    }};
    // Phi' = coef Phi, Phi(0) = I, solved coefficientwise.
    std::array<std::array<Jet, 2>, 2> phi;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) phi[i][j] = Jet(BigComplex(ctx, i == j ? 1 : 0), n);
    }
    for (int k = 0; k + 1 < n; ++k) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                BigComplex s(ctx);
                for (int l = 0; l < 2; ++l) {
                    for (int q = 0; q <= k; ++q) s += coef[i][l][q] * phi[l][j][k - q];
                }
                phi[i][j][k + 1] = s / (k + 1);
            }
        }
    }
    return phi;
}

std::vector<BilinearEK> derivTower(const ChainJets& jets, const Rational& sigma, int order) {
    if (order < 0 || order + 1 > jets.ma.length()) throw DomainError("tower order exceeds jet length");
    const auto pa = fundamentalMatrix(jets.ma, sigma);
    const auto pb = fundamentalMatrix(jets.mb, sigma);
    std::array<std::array<Jet, 2>, 2> prod;
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) prod[u][v] = pa[0][u] * pb[0][v];
    }
    std::vector<BilinearEK> out;
    for (int i = 0; i <= order; ++i) {
        BilinearEK e;
        for (int u = 0; u < 2; ++u) {
            for (int v = 0; v < 2; ++v) e.c[u][v] = prod[u][v][i] * factorial(i);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<BilinearEK> derivTower(const TransformChain& chain, const ChainPoint& point,
                                   const PrecisionContext& ctx, int order) {
    std::optional<BigComplex> x;
    if (point.legendreArg) x = complexNumeric(*point.legendreArg, ctx);
    const auto jets = chainJets(chain, complexNumeric(point.z0, ctx), x, order + 1);
    return derivTower(jets, finalSigma(chain), order);
}

std::vector<BigComplex> solveLinear(std::vector<std::vector<BigComplex>> m,
                                    std::vector<BigComplex> rhs) {
    const std::size_t n = m.size();
    if (n == 0 || rhs.size() != n) throw DomainError("solveLinear: shape mismatch");
    const auto& ctx = m[0][0].context();
    BigReal scale(ctx);
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("solveLinear: matrix is not square");
        for (const auto& v : row) scale = max(scale, abs(v));
    }
    if (scale.isZero()) throw SolveError("zero matrix");
    const BigReal tol = scale * BigReal::pow10(ctx, -(ctx.workingDigits() / 2));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        BigReal best = abs(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            BigReal a = abs(m[r][col]);
            if (a > best) {
                best = a;
                piv = r;
            }
        }
        if (best < tol) {
            throw SolveError("matrix is rank-deficient (pivot " + best.toString(3) + " at column " +
                             std::to_string(col) + ")");
        }
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const BigComplex f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<BigComplex> x(n, BigComplex(ctx));
    for (std::size_t i = n; i-- > 0;) {
        BigComplex s = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= m[i][c] * x[c];
        x[i] = s / m[i][i];
    }
    return x;
}

std::array<BigComplex, 4> legendreTarget(const PrecisionContext& ctx) {
    return {BigComplex(ctx, -1), BigComplex(ctx, 1), BigComplex(ctx, 1), BigComplex(ctx, 0)};
}

std::vector<BigComplex> solveA(const std::vector<BilinearEK>& tower,
                               const std::array<BigComplex, 4>& target) {
    if (tower.size() != 4) throw DomainError("solveA needs a tower of four entries");
    std::vector<std::vector<BigComplex>> m(4);
    for (int r = 0; r < 4; ++r) {
        for (int i = 0; i < 4; ++i) m[r].push_back(tower[i].flat()[r]);
    }
    std::vector<BigComplex> rhs(target.begin(), target.end());
    auto a = solveLinear(m, rhs);
    const auto& ctx = target[0].context();
    BigReal worst(ctx);
    BigReal size(ctx, 1);
    for (int r = 0; r < 4; ++r) {
        BigComplex s = -rhs[r];
        for (int i = 0; i < 4; ++i) {
            s += m[r][i] * a[i];
            size = max(size, abs(m[r][i] * a[i]));
        }
        worst = max(worst, abs(s));
    }
    if (worst > size * BigReal::pow10(ctx, -(ctx.digits() - 20))) {
        throw SolveError("solve residual " + worst.toString(3) + " above tolerance");
    }
    return a;
}

}  // namespace pirel
