#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WrongParent: return "WrongParent";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& what, int line) {
  std::string msg(to_string(kind));
  if (line > 0) msg += " (line " + std::to_string(line) + ")";
  msg += ": ";
  msg += what;
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& what, int line)
    : std::runtime_error(format_message(kind, what, line)), kind_(kind), line_(line), detail_(what) {}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::NotAGroup:
    case ErrorKind::NotAbelian:
    case ErrorKind::NotQuadratic:
      return true;
    default:
      return false;
  }
}

}  // namespace atlas
