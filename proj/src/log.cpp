#include "halign/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace halign {

namespace {
std::atomic<bool> g_quiet{false};
std::mutex g_log_mutex;
}  // namespace

void set_log_quiet(bool quiet) { g_quiet.store(quiet); }

bool log_quiet() { return g_quiet.load(); }

void log_info(const std::string& msg) {
    if (g_quiet.load()) return;
    std::lock_guard<std::mutex> lock(g_log_mutex);
    std::cerr << "[info] " << msg << "\n";
}

void log_warn(const std::string& msg) {
    if (g_quiet.load()) return;
    std::lock_guard<std::mutex> lock(g_log_mutex);
    std::cerr << "[warn] " << msg << "\n";
}

}  // namespace halign
