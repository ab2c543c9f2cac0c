#pragma once

#include <functional>
#include <string>

namespace lkweld {

// Soft warnings (under-resolved series, asymptotic formulas used outside
// their regime). The default handler writes to stderr.
using WarningHandler = std::function<void(const std::string&)>;

// Installs a handler and returns the previous one. Thread-safe.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

}  // namespace lkweld
