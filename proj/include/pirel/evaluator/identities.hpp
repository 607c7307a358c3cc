#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pirel/evaluator/verify.hpp"

namespace pirel {

/// Names of the checked functional identities, in suite order. The suite
/// also reports the Legendre relation on 50 moduli and its generalized
/// form for s in {1/6, 1/4, 1/3} on 10 moduli each.
std::vector<std::string> identityNames();

/// One identity at its fixed sample points; absError is the largest
/// |lhs - rhs| and the pass threshold is 10^-(digits - 5).
VerifyReport checkIdentity(std::string_view name, const PrecisionContext& ctx);

/// Every identity, in identityNames() order. A throwing check becomes a
/// failing report and the suite continues.
std::vector<VerifyReport> identitySuite(const PrecisionContext& ctx);

}  // namespace pirel
