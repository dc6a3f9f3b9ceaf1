#include "hilbtaut/error.hpp"

namespace hilbtaut {

std::string_view error_tag(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::UnknownSymbol: return "UNKNOWN_SYMBOL";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::IndexError: return "INDEX_ERROR";
    case ErrorCode::UnknownMap: return "UNKNOWN_MAP";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::VarietyMismatch: return "VARIETY_MISMATCH";
    case ErrorCode::ZeroRank: return "ZERO_RANK";
    case ErrorCode::NotLocallyFree: return "NOT_LOCALLY_FREE";
    case ErrorCode::MissingData: return "MISSING_DATA";
    case ErrorCode::H2Nonzero: return "H2_NONZERO";
    case ErrorCode::KTooSmall: return "K_TOO_SMALL";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace hilbtaut
