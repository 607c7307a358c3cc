#pragma once

#include <string>
#include <string_view>

namespace pirel {

/// Lowercase hex SHA-256 digest.
std::string sha256Hex(std::string_view data);

}  // namespace pirel
