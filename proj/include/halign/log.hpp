#pragma once

#include <string>

namespace halign {

void set_log_quiet(bool quiet);
bool log_quiet();

void log_info(const std::string& msg);
void log_warn(const std::string& msg);

}  // namespace halign
