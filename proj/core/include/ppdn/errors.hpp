#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ppdn {

/// Failure categories surfaced by the library. The CLI maps them to
/// machine-parsable `ERROR:<code>:` prefixes.
enum class errc {
  invalid_parameter,
  invalid_topology,
  infeasible_transfer,
  unreachable_load,
  insufficient_capacity,
  degenerate_query,
  limit_exceeded,
  schema_error,
  file_not_found,
  io_error,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_topology: return "invalid-topology";
    case errc::infeasible_transfer: return "infeasible-transfer";
    case errc::unreachable_load: return "unreachable-load";
    case errc::insufficient_capacity: return "insufficient-capacity";
    case errc::degenerate_query: return "degenerate-query";
    case errc::limit_exceeded: return "limit-exceeded";
    case errc::schema_error: return "schema";
    case errc::file_not_found: return "file-not-found";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

inline std::ostream& operator<<(std::ostream& os, errc code) {
  return os << to_string(code);
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

namespace detail {

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) throw error(code, message);
}

}  // namespace detail
}  // namespace ppdn
