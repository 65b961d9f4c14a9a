#include "ps2c/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace ps2c::log {

namespace {
std::atomic<Level> g_level{Level::warning};
std::mutex g_mutex;

void emit(Level at, std::string_view tag, std::string_view message) {
    if (at < g_level.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(g_mutex);
    std::clog << "[ps2c] " << tag << ": " << message << '\n';
}
}  // namespace

void set_level(Level level) { g_level.store(level, std::memory_order_relaxed); }
Level level() { return g_level.load(std::memory_order_relaxed); }

void info(std::string_view message) { emit(Level::info, "info", message); }
void warning(std::string_view message) { emit(Level::warning, "warning", message); }

}  // namespace ps2c::log
