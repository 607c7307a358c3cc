#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "pirel/catalog/series_spec.hpp"

namespace pirel {

using Json = nlohmann::ordered_json;

/// Rationals are strings ("5/576"); a surd a+b√d is {"a","b","d"}; a
/// complex value is {"re","im"}. Optional fields are omitted at defaults,
/// so serializing a parsed document reproduces it byte for byte.
Json quadToJson(const QuadExt& v);
QuadExt quadFromJson(const Json& j);
Json complexToJson(const ExactComplex& v);
ExactComplex complexFromJson(const Json& j);
Json polyToJson(const PolyQ& p);
PolyQ polyFromJson(const Json& j);
Json closedFormToJson(const ClosedForm& cf);
ClosedForm closedFormFromJson(const Json& j);

Json specToJson(const SeriesSpec& spec);
/// Throws LoadError on malformed input.
SeriesSpec specFromJson(const Json& j);

/// Whole catalog document, 2-space indented, newline-terminated.
std::string serializeCatalog(const std::vector<SeriesSpec>& specs);
std::vector<SeriesSpec> parseCatalog(std::string_view text);

}  // namespace pirel
