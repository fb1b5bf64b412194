#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rzeta {

enum class ErrorKind {
  InvalidArgument,
  PoleOfGamma,
  PoleOfZeta,
  PrecisionExhausted,
  ContourTouchesPole,
  NearZero,
  GridTooCoarse,
  NoConvergence,
  NonIntegerWinding,
  ContourNearZero,
  OutOfRange,
  LimitTooLarge,
  SuspectZero,
  ZeroLeadingCoefficient,
  OutsideDisk,
  UnknownIndex,
  CacheFormat,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rzeta
