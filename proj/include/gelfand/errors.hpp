#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gelfand {

enum class ErrorKind {
  AntisymmetryViolation,
  JacobiViolation,
  UnsupportedSize,
  NotDerivation,
  DegenerateRestriction,
  BlockMismatch,
  NotBiHomogeneous,
  MissingBorelData,
  BorelConstructionFailed,
  IrreducibleSplitIncomplete,
  UnknownName,
  RowOutOfRange,
  EquivariantBracketNotUnique,
  ParseError,
  UnknownEntry,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Error carrying a machine-readable kind and optional witness indices.
class GelfandError : public std::runtime_error {
 public:
  GelfandError(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace gelfand
