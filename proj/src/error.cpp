#include "metacomm/error.hpp"

namespace metacomm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::CharacterUndefined: return "CharacterUndefined";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::PrecisionUnsupported: return "PrecisionUnsupported";
    case ErrorKind::BadGenerator: return "BadGenerator";
    case ErrorKind::BadElement: return "BadElement";
    case ErrorKind::InternalCensusError: return "InternalCensusError";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::SingularModP: return "SingularModP";
    case ErrorKind::ScalarModP: return "ScalarModP";
    case ErrorKind::WrongSide: return "WrongSide";
    case ErrorKind::NotInOrder: return "NotInOrder";
    case ErrorKind::NoCensusMatch: return "NoCensusMatch";
    case ErrorKind::CensusCollision: return "CensusCollision";
  }
  return "Unknown";
}

}  // namespace metacomm
