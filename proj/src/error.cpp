#include "qlr/error.hpp"

#include <sstream>

namespace qlr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCell: return "InvalidCell";
    case ErrorKind::InvalidPriors: return "InvalidPriors";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidOverlap: return "InvalidOverlap";
    case ErrorKind::NonPositiveTotal: return "NonPositiveTotal";
    case ErrorKind::InvalidHbar: return "InvalidHbar";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotCounts: return "NotCounts";
  }
  return "Unknown";
}

namespace {

std::string describe_not_pd(std::size_t hypothesis, double min_eigenvalue) {
  std::ostringstream out;
  out << "overlap block of hypothesis " << hypothesis
      << " is not positive definite (smallest eigenvalue " << min_eigenvalue << ")";
  return out.str();
}

}  // namespace

NotPositiveDefiniteError::NotPositiveDefiniteError(std::size_t hypothesis, double min_eigenvalue)
    : Error(ErrorKind::NotPositiveDefinite, describe_not_pd(hypothesis, min_eigenvalue)),
      hypothesis_(hypothesis),
      min_eigenvalue_(min_eigenvalue) {}

}  // namespace qlr
