#include "hartree/errors.hpp"

#include <atomic>
#include <iostream>

namespace hartree {
namespace {

void stderr_handler(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

std::atomic<WarningHandler> g_handler{&stderr_handler};

}  // namespace

void set_warning_handler(WarningHandler handler) noexcept {
  g_handler.store(handler != nullptr ? handler : &stderr_handler);
}

void warn(const std::string& message) { g_handler.load()(message); }

}  // namespace hartree
