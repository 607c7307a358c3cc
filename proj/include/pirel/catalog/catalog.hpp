#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pirel/catalog/series_spec.hpp"

namespace pirel {

/// Every printed series, parsed once from the embedded catalog document
/// after its SHA-256 digest is checked. Throws LoadError on mismatch.
const std::vector<SeriesSpec>& catalogAll();

/// Throws NotFoundError.
const SeriesSpec& lookup(std::string_view id);
const SeriesSpec& lookup(const std::vector<SeriesSpec>& specs, std::string_view id);

/// The embedded document, byte for byte.
std::string_view embeddedCatalogText();
std::string_view embeddedCatalogSha256();

/// Parses `text` after checking it hashes to `expectedSha256` (lowercase hex).
std::vector<SeriesSpec> loadCatalog(std::string_view text, std::string_view expectedSha256);
/// Reads a catalog file; if "<path>.sha256" exists its digest must match.
std::vector<SeriesSpec> loadCatalogFile(const std::string& path);

/// "<digest>  <name>\n", the layout of sha256sum.
std::string checksumLine(std::string_view text, std::string_view name);

}  // namespace pirel
