#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skel {

enum class ErrorCode {
  MalformedJson,
  SchemaError,
  UnknownId,
  DuplicateId,
  NonPositiveLength,
  Disconnected,
  InvalidValue,
  OutOfRange,
  MalformedFiltration,
  NotPrime,
  MalformedCover,
  InconsistentData,
  InconsistentAnchors,
  WrongGraph,
  Io,
};

/// Stable identifier printed by the CLI, e.g. "E_UNKNOWN_ID".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skel
