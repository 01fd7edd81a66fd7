#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

namespace formk1::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line. Results and errors are written to `out` as JSON
/// (or `--out FILE`); help text goes to `out` as plain text.
int run(int argc, const char* const* argv, std::ostream& out);

/// Plain-text rendering used by --pretty: matrices as aligned tables, other
/// values one per line.
void render_pretty(std::ostream& os, const nlohmann::json& j, int indent = 0);

}  // namespace formk1::cli
