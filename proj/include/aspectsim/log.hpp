#pragma once

#include <string>

// Thin logging shim. Translation units that include libtorch cannot include
// spdlog (conflicting bundled fmt), so they log through these.
namespace aspectsim::log {

void debug(const std::string& message);
void info(const std::string& message);
void warn(const std::string& message);

/// "trace" .. "off"; unknown names throw std::invalid_argument.
void set_level(const std::string& level);

}  // namespace aspectsim::log
