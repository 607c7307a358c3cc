#include "pirel/evaluator/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "pirel/catalog/closed_form.hpp"
#include "pirel/evaluator/evaluate.hpp"

namespace pirel {

Json VerifyReport::toJson() const {
    Json j;
    j["id"] = id;
    j["digitsRequested"] = digitsRequested;
    j["absError"] = absError.isZero() ? std::string("0") : absError.toString(3);
    j["digitsMatched"] = digitsMatched;
    j["termsUsed"] = termsUsed;
    j["elapsedMillis"] = elapsedMillis;
    j["status"] = pass ? "pass" : "fail";
    if (!error.empty()) j["error"] = error;
    return j;
}

void grade(VerifyReport& report, const BigReal& absError, const PrecisionContext& ctx) {
    report.absError = absError.in(ctx);
    if (absError.isZero()) {
        report.digitsMatched = report.digitsRequested;
    } else {
        const double d = std::floor(-absError.log10Abs());
        report.digitsMatched = static_cast<int>(std::clamp(d, 0.0, double(report.digitsRequested)));
    }
    report.pass = absError < BigReal::pow10(absError.context(), -report.toleranceExponent);
}

VerifyReport verify(const SeriesSpec& spec, const PrecisionContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.id = spec.id;
    report.digitsRequested = ctx.digits();
    report.toleranceExponent = ctx.digits() - 10;
    const SeriesSum sum = sumSeries(spec, ctx);
    const BigReal rhs = evalClosedForm(spec.rhs, sum.context());
    BigReal err = abs(sum.value.re() - rhs);
    if (sum.isComplex) err = max(err, abs(sum.value.im()));
    report.termsUsed = sum.termsUsed;
    grade(report, err, ctx);
    report.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return report;
}

VerifyReport verifyNoThrow(const SeriesSpec& spec, const PrecisionContext& ctx) {
    try {
        return verify(spec, ctx);
    } catch (const std::exception& e) {
        VerifyReport report;
        report.id = spec.id;
        report.digitsRequested = ctx.digits();
        report.toleranceExponent = ctx.digits() - 10;
        report.absError = BigReal(ctx);
        report.error = e.what();
        return report;
    }
}

std::vector<VerifyReport> verifyAll(const std::vector<SeriesSpec>& specs,
                                    const PrecisionContext& ctx, int threads) {
    std::vector<VerifyReport> reports(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            reports[i] = verifyNoThrow(specs[i], ctx);
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(specs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(reports.begin(), reports.end(),
              [](const VerifyReport& a, const VerifyReport& b) { return a.id < b.id; });
    return reports;
}

}  // namespace pirel
