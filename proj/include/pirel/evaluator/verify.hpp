#pragma once

#include <string>
#include <vector>

#include "pirel/catalog/schema.hpp"
#include "pirel/catalog/series_spec.hpp"
#include "pirel/numerics/big_real.hpp"

namespace pirel {

struct VerifyReport {
    std::string id;
    int digitsRequested = 0;
    /// Pass threshold is 10^-toleranceExponent; digitsRequested - 10 for series.
    int toleranceExponent = 0;
    BigReal absError;
    int digitsMatched = 0;
    long termsUsed = 0;
    long elapsedMillis = 0;
    bool pass = false;
    /// Set when evaluation threw; the report then fails.
    std::string error;

    /// One JSON object; absError is a decimal string.
    Json toJson() const;
};

/// |series - rhs| against 10^-(digits - 10). Complex specs also need
/// |Im(series)| below the same threshold.
VerifyReport verify(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Like verify, but errors during evaluation become failing reports.
VerifyReport verifyNoThrow(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Verifies every spec on `threads` workers; reports come back sorted by id.
std::vector<VerifyReport> verifyAll(const std::vector<SeriesSpec>& specs,
                                    const PrecisionContext& ctx, int threads);

/// Fills absError, digitsMatched and pass from an error value.
void grade(VerifyReport& report, const BigReal& absError, const PrecisionContext& ctx);

}  // namespace pirel
