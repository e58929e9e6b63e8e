#pragma once

#include <string>

namespace shield {

// SHIELD_LOG env var: off (default) | info | debug. Output goes to stderr so
// stdout stays data-only.
enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace shield
