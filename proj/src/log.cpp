#include "shield/log.hpp"

#include <cstdlib>
#include <iostream>

namespace shield {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("SHIELD_LOG");
    if (env == nullptr) return LogLevel::Off;
    std::string v(env);
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Off;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::Info) std::cerr << "[shield] " << message << '\n';
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::Debug) std::cerr << "[shield] " << message << '\n';
}

}  // namespace shield
