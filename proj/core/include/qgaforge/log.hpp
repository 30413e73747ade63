#pragma once

#include <string>

namespace qgaforge {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

/// Level parsed once from the QGAFORGE_LOG environment variable
/// ("error" | "warn" | "info" | "debug", or 0-3). Defaults to warn.
LogLevel log_level();

bool log_enabled(LogLevel level);

/// Writes one line to stderr when the level is enabled.
void log_line(LogLevel level, const std::string& message);

}  // namespace qgaforge
