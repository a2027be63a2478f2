#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jcone {

enum class ErrorKind {
  kSingular,
  kNotHermitian,
  kNotPositive,
  kNotInImage,
  kDimensionMismatch,
  kNotJHermitian,
  kNotJPositive,
  kSignatureMismatch,
  kWeightOutOfRange,
  kNotBulletCommuting,
  kStepTooSmall,
  kPremiseViolated,
  kUnknownSuite,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can name the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Compact rendering of a real number for diagnostics (%.6g).
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace jcone
