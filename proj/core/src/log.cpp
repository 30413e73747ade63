#include "qgaforge/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace qgaforge {

namespace {

LogLevel parse_level(const char* raw) {
  if (raw == nullptr || *raw == '\0') {
    return LogLevel::kWarn;
  }
  if (std::strcmp(raw, "error") == 0 || std::strcmp(raw, "0") == 0) {
    return LogLevel::kError;
  }
  if (std::strcmp(raw, "warn") == 0 || std::strcmp(raw, "1") == 0) {
    return LogLevel::kWarn;
  }
  if (std::strcmp(raw, "info") == 0 || std::strcmp(raw, "2") == 0) {
    return LogLevel::kInfo;
  }
  if (std::strcmp(raw, "debug") == 0 || std::strcmp(raw, "3") == 0) {
    return LogLevel::kDebug;
  }
  return LogLevel::kWarn;
}

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::kError:
      return "error";
    case LogLevel::kWarn:
      return "warn";
    case LogLevel::kInfo:
      return "info";
    case LogLevel::kDebug:
      return "debug";
  }
  return "?";
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("QGAFORGE_LOG"));
  return level;
}

bool log_enabled(LogLevel level) {
  return static_cast<int>(level) <= static_cast<int>(log_level());
}

void log_line(LogLevel level, const std::string& message) {
  if (log_enabled(level)) {
    std::fprintf(stderr, "[%s] %s\n", level_tag(level), message.c_str());
  }
}

}  // namespace qgaforge
