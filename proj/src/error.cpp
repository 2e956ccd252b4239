#include "duploss/error.hpp"

namespace duploss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateValue: return "DuplicateValue";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorKind::WidthExceeded: return "WidthExceeded";
    case ErrorKind::NotSortedWindow: return "NotSortedWindow";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::InfiniteK: return "InfiniteK";
    case ErrorKind::TooManyMembers: return "TooManyMembers";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoWitness: return "NoWitness";
  }
  return "Unknown";
}

}  // namespace duploss
