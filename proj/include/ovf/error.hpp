#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ovf {

enum class ErrorKind {
  // linalg
  NonHermitian,
  NoConvergence,
  SingularMatrix,
  NonUnitary,
  DimensionMismatch,
  // frames / calculus / duality
  NotAFrame,
  InvalidParameter,
  SingularR,
  NoComplement,
  // groups
  InvalidCayleyTable,
  NotInvariant,
  NotAProjection,
  NotParseval,
  NotInAlgebra,
  NotEquivalent,
  GenericityFailure,
  DecompositionFailed,
  // homotopy
  NotSameRep,
  AlgebraFailure,
  // io
  FormatError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that report a mathematical rejection of the input rather
/// than a malformed file or an I/O failure.
bool is_mathematical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ovf
