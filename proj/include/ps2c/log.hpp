#pragma once

#include <string_view>

namespace ps2c::log {

enum class Level { debug, info, warning, quiet };

/// Messages below this level are dropped. Default: warning.
void set_level(Level level);
Level level();

void info(std::string_view message);
void warning(std::string_view message);

}  // namespace ps2c::log
