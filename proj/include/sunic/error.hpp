#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sunic {

enum class ErrorKind {
  NonPrimeP,
  NonInvertiblePolynomial,
  EmptyPolynomial,
  SpecTooLarge,
  InternalConsistency,
  DegenerateCase,
  WrongCharacteristic,
  SpecMismatch,
  NotInDerivedSubgroup,
  StructureError,
  NoDihedralWitness,
  EvenQ,
  LevelTooLarge,
  LevelMismatch,
  NotInOrbit,
  NotLevelOneStabilized,
  ScreenInconclusive,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sunic
