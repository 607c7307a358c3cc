#include "pirel/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "pirel/catalog/catalog.hpp"
#include "pirel/catalog/generators.hpp"
#include "pirel/catalog/schema.hpp"
#include "pirel/discovery/pipeline.hpp"
#include "pirel/errors.hpp"
#include "pirel/evaluator/evaluate.hpp"
#include "pirel/evaluator/identities.hpp"
#include "pirel/evaluator/verify.hpp"
#include "pirel/numerics/elliptic.hpp"

namespace pirel::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int digits = 200;
    bool json = false;
    int threads = 0;
    std::string id;
    std::string k;
    std::string s;
    std::string catalogPath;
    std::string chain;
    std::string family;
    std::string outPath;
    int maxDigits = 10000;
};

Rational parseRational(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + " must be a rational p/q, got '" + text + "'");
    }
}

const std::vector<SeriesSpec>& specs(const Options& o) {
    static std::vector<SeriesSpec> fromFile;
    if (o.catalogPath.empty()) return catalogAll();
    try {
        fromFile = loadCatalogFile(o.catalogPath);
    } catch (const LoadError& e) {
        throw UsageError(e.what());
    }
    return fromFile;
}

PrecisionContext context(const Options& o) {
    if (o.digits < 10) throw UsageError("--digits must be at least 10");
    return PrecisionContext(o.digits);
}

std::string familyLabel(const TermFamily& f) {
    std::string s(tagName(f.tag));
    if (f.s) s += "(s=" + f.s->toString() + ")";
    if (!f.divisor.isZero()) s += "/(" + f.divisor.toString() + ")";
    return s;
}

void printReport(std::ostream& out, const VerifyReport& r, const std::string& rhs, bool json) {
    if (json) {
        out << r.toJson().dump() << "\n";
        return;
    }
    out << std::left << std::setw(22) << r.id << (r.pass ? "pass" : "FAIL") << "  digits=" << r.digitsRequested
        << " matched=" << r.digitsMatched << " absError="
        << (r.absError.context().isNull() || r.absError.isZero() ? std::string("0") : r.absError.toString(3))
        << " terms=" << r.termsUsed << " ms=" << r.elapsedMillis;
    if (!rhs.empty()) out << "  rhs=" << rhs;
    if (!r.error.empty()) out << "  error: " << r.error;
    out << "\n";
}

void printSpec(std::ostream& out, const SeriesSpec& spec, bool json) {
    if (json) {
        out << specToJson(spec).dump() << "\n";
        return;
    }
    out << spec.id << ": " << spec.title << "\n"
        << "  family   " << familyLabel(spec.family) << "\n";
    if (spec.legendreStride > 0) {
        out << "  legendre P_" << (spec.legendreStride == 1 ? "" : std::to_string(spec.legendreStride)) << "n("
            << spec.legendreArg.toString() << ")\n";
    }
    out << "  z0       " << spec.z0.toString() << "\n"
        << "  poly     " << spec.poly.toString() << "\n";
    if (!spec.polyPrev.isZero()) out << "  polyPrev " << spec.polyPrev.toString() << "\n";
    out << "  rhs      " << spec.rhs.toString() << "\n";
}

int cmdList(const Options& o, std::ostream& out) {
    for (const auto& spec : specs(o)) {
        if (o.json) {
            out << specToJson(spec).dump() << "\n";
            continue;
        }
        std::ostringstream rate;
        rate << std::setprecision(6) << convergenceRateEstimate(spec);
        out << std::left << std::setw(22) << spec.id << std::setw(28) << familyLabel(spec.family) << ' ' << std::setw(12)
            << rate.str() << spec.rhs.toString() << "\n";
    }
    return 0;
}

int cmdVerify(const Options& o, std::ostream& out) {
    if (o.id.empty()) throw UsageError("--id is required");
    const SeriesSpec& spec = lookup(specs(o), o.id);
    const auto report = verifyNoThrow(spec, context(o));
    printReport(out, report, spec.rhs.toString(), o.json);
    return report.pass ? 0 : kExitFail;
}

int cmdVerifyAll(const Options& o, std::ostream& out) {
    const auto& all = specs(o);
    const int threads = o.threads > 0 ? o.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto reports = verifyAll(all, context(o), threads);
    int failed = 0;
    for (const auto& r : reports) {
        printReport(out, r, o.json ? std::string() : lookup(all, r.id).rhs.toString(), o.json);
        failed += r.pass ? 0 : 1;
    }
    if (!o.json) out << reports.size() - failed << "/" << reports.size() << " passed\n";
    return failed == 0 ? 0 : kExitFail;
}

int cmdEval(const Options& o, std::ostream& out) {
    if (o.id.empty()) throw UsageError("--id is required");
    const SeriesSpec& spec = lookup(specs(o), o.id);
    const auto ctx = context(o);
    const auto t0 = std::chrono::steady_clock::now();
    const SeriesSum sum = sumSeries(spec, ctx);
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    const BigComplex v = sum.value.in(ctx);
    if (o.json) {
        Json j;
        j["id"] = spec.id;
        j["digits"] = o.digits;
        j["re"] = v.re().toString(o.digits);
        if (sum.isComplex) j["im"] = v.im().toString(o.digits);
        j["termsUsed"] = sum.termsUsed;
        j["elapsedMillis"] = ms;
        out << j.dump() << "\n";
    } else {
        out << spec.id << " = " << v.re().toString(o.digits);
        if (sum.isComplex) out << " + i*(" << v.im().toString(o.digits) << ")";
        out << "\n  terms=" << sum.termsUsed << " ms=" << ms << "\n";
    }
    return 0;
}

int cmdGen(const Options& o, std::ostream& out) {
    std::vector<SeriesSpec> generated;
    try {
        if (o.family == "thm1") generated.push_back(genThm1(parseRational(o.k, "--k")));
        else if (o.family == "thm2") generated.push_back(genThm2(parseRational(o.k, "--k")));
        else if (o.family == "thm3") generated.push_back(genThm3(parseRational(o.k, "--k")));
        else if (o.family == "thm4") generated.push_back(genThm4(parseRational(o.k, "--k")));
        else if (o.family == "guic3") generated = genGuic3(parseRational(o.s, "--s"));
        else throw UsageError("unknown family '" + o.family + "' (thm1, thm2, thm3, thm4, guic3)");
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto ctx = context(o);
    bool ok = true;
    for (const auto& raw : generated) {
        const SeriesSpec spec = normalize(raw);
        printSpec(out, spec, o.json);
        const auto report = verifyNoThrow(spec, ctx);
        printReport(out, report, spec.rhs.toString(), o.json);
        ok = ok && report.pass;
    }
    return ok ? 0 : kExitFail;
}

int cmdIdentities(const Options& o, std::ostream& out) {
    const auto reports = identitySuite(context(o));
    int failed = 0;
    for (const auto& r : reports) {
        printReport(out, r, "", o.json);
        failed += r.pass ? 0 : 1;
    }
    if (!o.json) out << reports.size() - failed << "/" << reports.size() << " passed\n";
    return failed == 0 ? 0 : kExitFail;
}

int cmdDiscover(const Options& o, std::ostream& out) {
    if (o.chain.empty()) throw UsageError("--chain is required");
    const TransformChain& chain = chainByName(o.chain);
    const Rational k = (o.k.empty() && chain.name == "guic1") ? Rational(1, 4) : parseRational(o.k, "--k");
    const auto ctx = context(o);
    try {
        const auto r = rediscover(chain, k, ctx);
        const auto x = xSubstitutionCheck(chain, chainPoint(chain, k), ctx);
        printSpec(out, r.spec, o.json);
        printReport(out, r.report, r.spec.rhs.toString(), o.json);
        if (o.json) {
            Json j;
            j["xSubstitution"] = x.pass ? "pass" : "fail";
            j["difference"] = x.difference.isZero() ? std::string("0") : x.difference.toString(3);
            out << j.dump() << "\n";
        } else {
            out << "  x-substitution " << (x.pass ? "pass" : "FAIL") << " (max |dA| = "
                << (x.difference.isZero() ? std::string("0") : x.difference.toString(3)) << ")\n";
        }
        return r.report.pass && x.pass ? 0 : kExitFail;
    } catch (const PipelineError& e) {
        if (o.json) {
            Json j;
            j["chain"] = chain.name;
            j["k"] = k.toString();
            j["stage"] = e.stage();
            j["error"] = e.what();
            out << j.dump() << "\n";
        } else {
            out << "discovery failed at stage '" << e.stage() << "': " << e.what() << "\n";
        }
        return kExitFail;
    }
}

template <class F>
double secondsFor(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmdBench(const Options& o, std::ostream& out) {
    const std::vector<std::string> series = {"thm1-k12", "ramaleg1", "concl-2"};
    for (int digits = 1000; digits <= o.maxDigits; digits *= 10) {
        const PrecisionContext ctx(digits);
        std::vector<std::pair<std::string, double>> rows;
        const BigReal x = sqrt(BigReal(ctx, Rational(1, 2)));
        rows.emplace_back("K(1/sqrt2)", secondsFor([&] { (void)ellipK(x); }));
        rows.emplace_back("E(1/sqrt2)", secondsFor([&] { (void)ellipE(x); }));
        for (const auto& id : series) {
            const SeriesSpec& spec = lookup(id);
            rows.emplace_back(id, secondsFor([&] { (void)sumSeries(spec, ctx); }));
        }
        for (const auto& [name, sec] : rows) {
            const double rate = sec > 0 ? digits / sec : 0.0;
            if (o.json) {
                Json j;
                j["target"] = name;
                j["digits"] = digits;
                j["seconds"] = sec;
                j["digitsPerSecond"] = rate;
                out << j.dump() << "\n";
            } else {
                out << std::left << std::setw(14) << name << std::right << std::setw(8) << digits << " digits "
                    << std::setw(12) << std::fixed << std::setprecision(4) << sec << " s " << std::setw(14)
                    << std::setprecision(0) << rate << " digits/s\n"
                    << std::defaultfloat;
            }
        }
    }
    return 0;
}

int cmdExport(const Options& o, std::ostream& out) {
    const std::string text = serializeCatalog(specs(o));
    if (o.outPath.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(o.outPath, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.outPath);
    f << text;
    std::ofstream sidecar(o.outPath + ".sha256", std::ios::binary);
    const auto slash = o.outPath.find_last_of('/');
    sidecar << checksumLine(text, slash == std::string::npos ? o.outPath : o.outPath.substr(slash + 1));
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* env = std::getenv("PIREL_DIGITS")) {
        try {
            o.digits = std::stoi(env);
        } catch (const std::exception&) {
            err << "PIREL_DIGITS must be an integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Series for 1/pi: catalog verification, generators and Legendre-relation discovery", "pirel"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--digits", o.digits, "Decimal digits (default 200, env PIREL_DIGITS)");
        sub->add_flag("--json", o.json, "One JSON object per line");
    };
    auto withCatalog = [&](CLI::App* sub) {
        sub->add_option("--catalog", o.catalogPath, "Catalog file instead of the embedded one");
    };

    auto* list = app.add_subcommand("list", "List catalog entries");
    common(list);
    withCatalog(list);
    auto* verifyCmd = app.add_subcommand("verify", "Verify one catalog entry");
    common(verifyCmd);
    withCatalog(verifyCmd);
    verifyCmd->add_option("--id", o.id, "Catalog id");
    auto* verifyAllCmd = app.add_subcommand("verify-all", "Verify every catalog entry");
    common(verifyAllCmd);
    withCatalog(verifyAllCmd);
    verifyAllCmd->add_option("--threads", o.threads, "Worker threads (default: hardware)")->check(CLI::NonNegativeNumber);
    auto* evalCmd = app.add_subcommand("eval", "Evaluate one catalog series");
    common(evalCmd);
    withCatalog(evalCmd);
    evalCmd->add_option("--id", o.id, "Catalog id");
    auto* gen = app.add_subcommand("gen", "Instantiate a parameterized family and verify it");
    common(gen);
    gen->add_option("family", o.family, "thm1 | thm2 | thm3 | thm4 | guic3")->required();
    gen->add_option("--k", o.k, "Parameter k as p/q");
    gen->add_option("--s", o.s, "Parameter s as p/q");
    auto* ids = app.add_subcommand("identities", "Run the functional-identity suite");
    common(ids);
    auto* disc = app.add_subcommand("discover", "Rediscover a series from a transform chain");
    common(disc);
    disc->add_option("--chain", o.chain, "thm1 | thm2 | thm3 | thm4 | guic1 | clausen");
    disc->add_option("--k", o.k, "Chain parameter as p/q (guic1: y, default 1/4)");
    auto* bench = app.add_subcommand("bench", "Digits per second for K, E and three series");
    bench->add_flag("--json", o.json, "One JSON object per line");
    bench->add_option("--max-digits", o.maxDigits, "Largest precision level (1000, 10000, 100000)")
        ->check(CLI::Range(1000, 100000));
    auto* catalogCmd = app.add_subcommand("catalog", "Catalog document operations");
    catalogCmd->require_subcommand(1);
    auto* exportCmd = catalogCmd->add_subcommand("export", "Write the catalog document");
    withCatalog(exportCmd);
    exportCmd->add_option("--out", o.outPath, "Output file (writes <file>.sha256 too); default stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (list->parsed()) return cmdList(o, out);
        if (verifyCmd->parsed()) return cmdVerify(o, out);
        if (verifyAllCmd->parsed()) return cmdVerifyAll(o, out);
        if (evalCmd->parsed()) return cmdEval(o, out);
        if (gen->parsed()) return cmdGen(o, out);
        if (ids->parsed()) return cmdIdentities(o, out);
        if (disc->parsed()) return cmdDiscover(o, out);
        if (bench->parsed()) return cmdBench(o, out);
        if (exportCmd->parsed()) return cmdExport(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotFoundError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace pirel::cli
