#include "ovf/error.hpp"

namespace ovf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonUnitary: return "NonUnitary";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::SingularR: return "SingularR";
    case ErrorKind::NoComplement: return "NoComplement";
    case ErrorKind::InvalidCayleyTable: return "InvalidCayleyTable";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::NotParseval: return "NotParseval";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::NotEquivalent: return "NotEquivalent";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NotSameRep: return "NotSameRep";
    case ErrorKind::AlgebraFailure: return "AlgebraFailure";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_mathematical(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FormatError:
    case ErrorKind::IoError:
    case ErrorKind::InvalidCayleyTable:
    case ErrorKind::DimensionMismatch:
      return false;
    default:
      return true;
  }
}

}  // namespace ovf
