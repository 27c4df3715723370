#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>

namespace kummerlab::cli {

/// Raised by a command to end the run with a specific exit code and a
/// machine-readable error object.
struct Failure : std::runtime_error {
  Failure(int code, std::string kind, const std::string& message, nlohmann::json details = {})
      : std::runtime_error(message), code(code), kind(std::move(kind)), details(std::move(details)) {}
  int code;
  std::string kind;
  nlohmann::json details;
};

inline constexpr int kExitValidation = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitCertificate = 3;

struct Globals {
  unsigned workers = 1;
  std::function<int()> action;
};

void register_commands(CLI::App& app, Globals& globals);

}  // namespace kummerlab::cli
