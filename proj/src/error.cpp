#include "skel/error.hpp"

namespace skel {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedJson: return "E_MALFORMED_JSON";
    case ErrorCode::SchemaError: return "E_SCHEMA";
    case ErrorCode::UnknownId: return "E_UNKNOWN_ID";
    case ErrorCode::DuplicateId: return "E_DUPLICATE_ID";
    case ErrorCode::NonPositiveLength: return "E_NONPOSITIVE_LENGTH";
    case ErrorCode::Disconnected: return "E_DISCONNECTED";
    case ErrorCode::InvalidValue: return "E_INVALID_VALUE";
    case ErrorCode::OutOfRange: return "E_OUT_OF_RANGE";
    case ErrorCode::MalformedFiltration: return "E_MALFORMED_FILTRATION";
    case ErrorCode::NotPrime: return "E_NOT_PRIME";
    case ErrorCode::MalformedCover: return "E_MALFORMED_COVER";
    case ErrorCode::InconsistentData: return "E_INCONSISTENT_DATA";
    case ErrorCode::InconsistentAnchors: return "E_INCONSISTENT_ANCHORS";
    case ErrorCode::WrongGraph: return "E_WRONG_GRAPH";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace skel
