#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace pgl {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Verbosity from POLICY_GAME_LAB_LOG (error|warn|info|debug); warn when the
/// variable is unset or unrecognized.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* raw = std::getenv("POLICY_GAME_LAB_LOG");
    const std::string value = raw == nullptr ? "" : raw;
    if (value == "error") return LogLevel::Error;
    if (value == "info") return LogLevel::Info;
    if (value == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

inline void log(LogLevel level, const std::string& message) {
  if (level > log_level()) return;
  const char* tag = "warn";
  switch (level) {
    case LogLevel::Error: tag = "error"; break;
    case LogLevel::Warn: tag = "warn"; break;
    case LogLevel::Info: tag = "info"; break;
    case LogLevel::Debug: tag = "debug"; break;
  }
  std::cerr << "[" << tag << "] " << message << "\n";
}

}  // namespace pgl
