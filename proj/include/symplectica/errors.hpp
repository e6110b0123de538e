#pragma once

#include <stdexcept>
#include <string>

namespace symplectica {

enum class ErrorKind {
  NotSymmetric,
  NotPositiveDefinite,
  NotSymplectic,
  NoConvergence,
  IllConditioned,
  OddDimension,
  DimensionMismatch,
  DegeneratePairing,
  PartitionMismatch,
  IndexOutOfRange,
  LengthMismatch,
  UnknownCheckName,
  BadInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Exit-code buckets used by the CLI: 2 = input/usage, 3 = numerical breakdown.
  bool is_usage_error() const {
    switch (kind_) {
      case ErrorKind::NotSymmetric:
      case ErrorKind::NotPositiveDefinite:
      case ErrorKind::OddDimension:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::PartitionMismatch:
      case ErrorKind::IndexOutOfRange:
      case ErrorKind::LengthMismatch:
      case ErrorKind::UnknownCheckName:
      case ErrorKind::BadInput:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace symplectica
