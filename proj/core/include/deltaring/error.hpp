#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltaring {

enum class Errc {
  ParseError,
  AssociativityViolation,
  CommutativityViolation,
  DegreeMismatch,
  NoUnit,
  UnsupportedCoefficients,
  NotSemiperfect,
  NotLocal,
  Unsupported,
  IllFormedMap,
  SizeCapExceeded,
  NotQuasiFrobenius,
  ParityObstruction,
  WeightOverflow,
  WindowTooWideForWeightBound,
  NotChainMap,
  NotProjectiveInput,
  LiftFailure,
  WindowEmpty,
  ShapeMismatch,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(Errc e) noexcept;

/// The single exception type of the library. `kind()` identifies the failure
/// class; the message names the offending indices or values.
class Error : public std::runtime_error {
 public:
  Error(Errc kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  [[nodiscard]] Errc kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  [[nodiscard]] std::string const& detail() const noexcept { return detail_; }

 private:
  Errc kind_;
  std::string detail_;
};

}  // namespace deltaring
