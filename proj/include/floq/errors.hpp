#pragma once

#include <stdexcept>
#include <string>

namespace floq {

// Problem size exceeds the configured dense-diagonalization budget.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent scenario configuration.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace floq
