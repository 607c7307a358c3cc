#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pirel/catalog/catalog.hpp"
#include "pirel/catalog/schema.hpp"
#include "pirel/cli/app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result runCli(std::vector<std::string> args) {
    args.insert(args.begin(), "pirel");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = pirel::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<pirel::Json> jsonLines(const std::string& text) {
    std::vector<pirel::Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(pirel::Json::parse(line));
    }
    return out;
}

}  // namespace

TEST(Cli, VerifyPrintsPassAndRhs) {
    const auto r = runCli({"verify", "--id", "thm1-k12", "--digits", "500"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("pass"), std::string::npos);
    EXPECT_NE(r.out.find("2160/pi"), std::string::npos);
}

TEST(Cli, VerifyJson) {
    const auto r = runCli({"verify", "--id", "weird", "--digits", "100", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto lines = jsonLines(r.out);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0]["status"], "pass");
    EXPECT_EQ(lines[0]["digitsRequested"], 100);
}

TEST(Cli, MissingIdIsUsageError) {
    const auto r = runCli({"verify", "--id", "missing"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("missing"), std::string::npos);
}

TEST(Cli, UnknownFlagsAndBadRationalsAreRejected) {
    EXPECT_EQ(runCli({"verify", "--bogus"}).code, 2);
    EXPECT_EQ(runCli({}).code, 2);
    EXPECT_EQ(runCli({"gen", "thm1", "--k", "0.5"}).code, 2);
    EXPECT_EQ(runCli({"gen", "thm1", "--k", "3/2"}).code, 2);
    EXPECT_EQ(runCli({"gen", "thm9", "--k", "1/2"}).code, 2);
    EXPECT_EQ(runCli({"verify", "--id", "thm1-k12", "--digits", "abc"}).code, 2);
}

TEST(Cli, GenEmitsSpecAndPassingReport) {
    const auto r = runCli({"gen", "thm1", "--k", "2/3", "--digits", "200", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = jsonLines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    const auto spec = pirel::specFromJson(lines[0]);
    EXPECT_EQ(spec.rhs.toString(), "87750/pi");
    EXPECT_EQ(lines[1]["status"], "pass");
}

TEST(Cli, GenGuic3EmitsThreeSpecs) {
    const auto r = runCli({"gen", "guic3", "--s", "1/5", "--digits", "80", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(jsonLines(r.out).size(), 6u);
}

TEST(Cli, VerifyAllIsDeterministicAcrossThreads) {
    auto strip = [](const std::string& text) {
        auto lines = jsonLines(text);
        for (auto& j : lines) j.erase("elapsedMillis");
        return lines;
    };
    const auto a = runCli({"verify-all", "--digits", "60", "--json", "--threads", "1"});
    const auto b = runCli({"verify-all", "--digits", "60", "--json", "--threads", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(strip(a.out), strip(b.out));
    EXPECT_EQ(strip(a.out).size(), pirel::catalogAll().size());
}

TEST(Cli, DiscoverEmitsRoundTrippableSpec) {
    const auto r = runCli({"discover", "--chain", "thm2", "--k", "1/3", "--digits", "100", "--json"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    const auto lines = jsonLines(r.out);
    ASSERT_EQ(lines.size(), 3u);
    const auto spec = pirel::specFromJson(lines[0]);
    EXPECT_EQ(spec.poly.toString(), "1-3*n-84*n^2-121*n^3");
    EXPECT_EQ(lines[2]["xSubstitution"], "pass");
    const auto bad = runCli({"discover", "--chain", "clausen", "--k", "3/10", "--digits", "60", "--json"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(jsonLines(bad.out).at(0)["stage"], "solve");
    EXPECT_EQ(runCli({"discover", "--chain", "nope", "--k", "1/2"}).code, 2);
}

TEST(Cli, CatalogExportRoundTripsThroughVerify) {
    const auto dir = std::filesystem::temp_directory_path() / "pirel_cli_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "catalog.json").string();
    ASSERT_EQ(runCli({"catalog", "export", "--out", path}).code, 0);
    std::ifstream f(path);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(text, std::string(pirel::embeddedCatalogText()));
    std::ifstream sha(path + ".sha256");
    std::string line;
    std::getline(sha, line);
    EXPECT_EQ(line.substr(0, 64), std::string(pirel::embeddedCatalogSha256()));
    EXPECT_EQ(runCli({"verify", "--catalog", path, "--id", "guic1", "--digits", "60"}).code, 0);

    // A tampered copy with a stale checksum is refused.
    std::ofstream(path, std::ios::app) << " ";
    EXPECT_EQ(runCli({"verify", "--catalog", path, "--id", "guic1"}).code, 2);
    std::filesystem::remove_all(dir);
}

TEST(Cli, CommittedCatalogFileMatchesEmbedded) {
    EXPECT_EQ(runCli({"verify", "--catalog", std::string(PIREL_SOURCE_DIR) + "/data/catalog.json", "--id",
                      "thm1-k23", "--digits", "60"})
                  .code,
              0);
}

TEST(Cli, EnvironmentOverridesDefaultDigits) {
    setenv("PIREL_DIGITS", "40", 1);
    const auto r = runCli({"verify", "--id", "ramaleg1", "--json"});
    unsetenv("PIREL_DIGITS");
    EXPECT_EQ(jsonLines(r.out).at(0)["digitsRequested"], 40);
    const auto flag = runCli({"verify", "--id", "ramaleg1", "--json", "--digits", "50"});
    EXPECT_EQ(jsonLines(flag.out).at(0)["digitsRequested"], 50);
}

TEST(Cli, ListEvalIdentitiesBench) {
    const auto list = runCli({"list", "--json"});
    EXPECT_EQ(list.code, 0);
    EXPECT_EQ(jsonLines(list.out).size(), pirel::catalogAll().size());
    const auto eval = runCli({"eval", "--id", "ramaleg3", "--digits", "30"});
    EXPECT_EQ(eval.code, 0);
    EXPECT_NE(eval.out.find("1.27323954473516268615107010698"), std::string::npos);  // 4/pi
    EXPECT_EQ(runCli({"identities", "--digits", "40"}).code, 0);
    const auto bench = runCli({"bench", "--max-digits", "1000", "--json"});
    EXPECT_EQ(bench.code, 0);
    EXPECT_EQ(jsonLines(bench.out).size(), 5u);
}
