#ifndef QLR_ERROR_HPP
#define QLR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlr {

enum class ErrorKind {
  InvalidCell,
  InvalidPriors,
  BadShape,
  BadIndex,
  Unsupported,
  DegenerateRange,
  ShapeMismatch,
  InvalidOverlap,
  NonPositiveTotal,
  InvalidHbar,
  NotPositiveDefinite,
  ParseError,
  NotCounts,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the orthonormalization when the Gram matrix of one hypothesis
/// is not positive definite.
class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(std::size_t hypothesis, double min_eigenvalue);

  std::size_t hypothesis() const noexcept { return hypothesis_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  std::size_t hypothesis_;
  double min_eigenvalue_;
};

}  // namespace qlr

#endif  // QLR_ERROR_HPP
