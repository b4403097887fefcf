#include "dic/types.hpp"

namespace dic {

std::string to_string(const Color& c) {
  return "(" + std::to_string(c.level) + "," + std::to_string(static_cast<int>(c.offset)) + ")";
}

std::string_view to_string(SlsMode mode) {
  return mode == SlsMode::Incremental ? "incremental" : "dynamic";
}

SlsMode parse_mode(std::string_view text) {
  if (text == "incremental") return SlsMode::Incremental;
  if (text == "dynamic") return SlsMode::Dynamic;
  throw Error(Errc::BadParams, "unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownId: return "UnknownId";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::ModeViolation: return "ModeViolation";
    case Errc::NotMarked: return "NotMarked";
    case Errc::NotConsecutiveOnes: return "NotConsecutiveOnes";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadParams: return "BadParams";
    case Errc::TraceInvalid: return "TraceInvalid";
    case Errc::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace dic
