#include "sunic/error.hpp"

namespace sunic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::NonInvertiblePolynomial: return "NonInvertiblePolynomial";
    case ErrorKind::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorKind::SpecTooLarge: return "SpecTooLarge";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::DegenerateCase: return "DegenerateCase";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotInDerivedSubgroup: return "NotInDerivedSubgroup";
    case ErrorKind::StructureError: return "StructureError";
    case ErrorKind::NoDihedralWitness: return "NoDihedralWitness";
    case ErrorKind::EvenQ: return "EvenQ";
    case ErrorKind::LevelTooLarge: return "LevelTooLarge";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotInOrbit: return "NotInOrbit";
    case ErrorKind::NotLevelOneStabilized: return "NotLevelOneStabilized";
    case ErrorKind::ScreenInconclusive: return "ScreenInconclusive";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sunic
