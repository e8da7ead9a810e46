#include "pwl/errors.hpp"

#include <fmt/format.h>

#include "pwl/numeric_policy.hpp"

namespace pwl {
namespace {
NumericPolicy g_policy;
}  // namespace

const NumericPolicy& numeric_policy() { return g_policy; }

ScopedNumericPolicy::ScopedNumericPolicy(const NumericPolicy& p) : saved_(g_policy) {
  g_policy = p;
}

ScopedNumericPolicy::~ScopedNumericPolicy() { g_policy = saved_; }

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GapOrOverlap: return "GapOrOverlap";
    case ErrorKind::DiscontinuousBoundary: return "DiscontinuousBoundary";
    case ErrorKind::EmptyInteriorCone: return "EmptyInteriorCone";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::NonIntegerWinding: return "NonIntegerWinding";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DegreeOne: return "DegreeOne";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::SingularA: return "SingularA";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

DiscontinuousBoundaryError::DiscontinuousBoundaryError(std::size_t i_, std::size_t j_,
                                                       double ux_, double uy_,
                                                       double mismatch)
    : Error(ErrorKind::DiscontinuousBoundary,
            fmt::format("pieces {} and {} disagree on boundary ray ({:.6g}, {:.6g}): "
                        "mismatch {:.3e}",
                        i_, j_, ux_, uy_, mismatch)),
      i(i_), j(j_), ux(ux_), uy(uy_), mismatch_norm(mismatch) {}

SyntaxError::SyntaxError(std::size_t off, const std::string& msg)
    : Error(ErrorKind::SyntaxError, fmt::format("syntax error at offset {}: {}", off, msg)),
      offset(off) {}

}  // namespace pwl
