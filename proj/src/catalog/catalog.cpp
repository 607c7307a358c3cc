#include "pirel/catalog/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pirel/catalog/schema.hpp"
#include "pirel/catalog/sha256.hpp"
#include "pirel/errors.hpp"

namespace pirel {

namespace detail {
extern const std::string_view kEmbeddedCatalog;
extern const std::string_view kEmbeddedCatalogSha256;
}  // namespace detail

std::string_view embeddedCatalogText() { return detail::kEmbeddedCatalog; }
std::string_view embeddedCatalogSha256() { return detail::kEmbeddedCatalogSha256; }

std::vector<SeriesSpec> loadCatalog(std::string_view text, std::string_view expectedSha256) {
    const std::string actual = sha256Hex(text);
    if (actual != expectedSha256) {
        throw LoadError("catalog checksum mismatch: expected " + std::string(expectedSha256) +
                        ", got " + actual);
    }
    return parseCatalog(text);
}

namespace {
std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
}  // namespace

std::vector<SeriesSpec> loadCatalogFile(const std::string& path) {
    const std::string text = readFile(path);
    const std::string shaPath = path + ".sha256";
    if (!std::filesystem::exists(shaPath)) return parseCatalog(text);
    std::istringstream line(readFile(shaPath));
    std::string digest;
    line >> digest;
    return loadCatalog(text, digest);
}

std::string checksumLine(std::string_view text, std::string_view name) {
    return sha256Hex(text) + "  " + std::string(name) + "\n";
}

const std::vector<SeriesSpec>& catalogAll() {
    static const std::vector<SeriesSpec> specs =
        loadCatalog(embeddedCatalogText(), embeddedCatalogSha256());
    return specs;
}

const SeriesSpec& lookup(const std::vector<SeriesSpec>& specs, std::string_view id) {
    for (const auto& s : specs) {
        if (s.id == id) return s;
    }
    throw NotFoundError("no catalog entry with id '" + std::string(id) + "'");
}

const SeriesSpec& lookup(std::string_view id) { return lookup(catalogAll(), id); }

}  // namespace pirel
