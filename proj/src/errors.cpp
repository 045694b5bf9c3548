#include "merowright/errors.hpp"

namespace mw {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::range: return "range";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::pole: return "pole";
    case ErrorCode::degenerate: return "degenerate";
  }
  return "unknown";
}

}  // namespace mw
