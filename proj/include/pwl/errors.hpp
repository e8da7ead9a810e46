#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pwl {

enum class ErrorKind {
  InvalidArgument,
  GapOrOverlap,
  DiscontinuousBoundary,
  EmptyInteriorCone,
  SingularMatrix,
  DegenerateMap,
  NonIntegerWinding,
  NotInvertible,
  DegreeOne,
  GenerationFailed,
  SingularA,
  NotApplicable,
  DimensionMismatch,
  SyntaxError,
  DomainError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Adjacent pieces i, j disagree on their shared boundary ray (ux, uy).
class DiscontinuousBoundaryError : public Error {
 public:
  DiscontinuousBoundaryError(std::size_t i, std::size_t j, double ux, double uy,
                             double mismatch);
  std::size_t i, j;
  double ux, uy;
  double mismatch_norm;
};

// offset is a byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& msg);
  std::size_t offset;
};

}  // namespace pwl
