#pragma once

#include <array>
#include <vector>

#include "pirel/discovery/chain.hpp"

namespace pirel {

/// c_KK K(a)K(b) + c_EK E(a)K(b) + c_KE K(a)E(b) + c_EE E(a)E(b), with K, E
/// the final sigma-integrals of the chain and coefficients taken at z0.
struct BilinearEK {
    std::array<std::array<BigComplex, 2>, 2> c;  // c[u][v], u at a, v at b; 0 = K, 1 = E

    /// (KK, EK, KE, EE), the order of the Legendre target.
    std::array<BigComplex, 4> flat() const;
};

/// Fundamental matrix of the (K_sigma, E_sigma) system along m(t):
/// row 0 expresses K_sigma(m(t)) and row 1 E_sigma(m(t)) in terms of the
/// values at the base point, as jets in t.
std::array<std::array<Jet, 2>, 2> fundamentalMatrix(const Jet& m, const Rational& sigma);

/// pi^2 G^(i)(z0) for i = 0..order, where pi^2 G = K(ma) K(mb).
std::vector<BilinearEK> derivTower(const ChainJets& jets, const Rational& sigma, int order);
/// Convenience: jets at the chain's exact point.
std::vector<BilinearEK> derivTower(const TransformChain& chain, const ChainPoint& point,
                                   const PrecisionContext& ctx, int order = 3);

/// A_0..A_3 with sum_i A_i tower[i] = target (order KK, EK, KE, EE).
/// Throws SolveError when the system is singular to working precision or
/// the residual exceeds 10^-(digits - 20).
std::vector<BigComplex> solveA(const std::vector<BilinearEK>& tower,
                               const std::array<BigComplex, 4>& target);
/// Target (-1, 1, 1, 0) of the Legendre relation.
std::array<BigComplex, 4> legendreTarget(const PrecisionContext& ctx);

/// Gaussian elimination with partial pivoting on an n x n complex system.
/// Throws SolveError if a pivot is below 10^-(working digits / 2) relative
/// to the largest entry.
std::vector<BigComplex> solveLinear(std::vector<std::vector<BigComplex>> m,
                                    std::vector<BigComplex> rhs);

}  // namespace pirel
