#pragma once

#include <ostream>

namespace pirel::cli {

/// Runs one command line. Returns 0 when every requested check passes,
/// 1 when a verification fails and 2 on usage or lookup errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pirel::cli
