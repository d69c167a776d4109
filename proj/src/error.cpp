#include "junior/error.hpp"

namespace junior {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotCalabiYau: return "NotCalabiYau";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::Internal: return "Internal";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
    case ErrorKind::MissingNode: return "MissingNode";
    case ErrorKind::IrregularHole: return "IrregularHole";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::BoundaryEdge: return "BoundaryEdge";
    case ErrorKind::BoundUnstable: return "BoundUnstable";
  }
  return "Unknown";
}

}  // namespace junior
