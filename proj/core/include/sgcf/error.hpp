#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgcf {

enum class ErrorCode {
  dimension,
  singular,
  disconnected,
  precondition,
  resource_limit,
  integrality,
  unknown_vertex,
  invalid_configuration,
  search_exhausted,
  unsupported,
  parse,
  internal,
};

/// Stable identifier used in structured error output.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgcf
