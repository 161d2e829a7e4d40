#include "concepts/error.hpp"

namespace concepts {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::EmptyName: return "EmptyName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::LayerViolation: return "LayerViolation";
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::DuplicatePattern: return "DuplicatePattern";
    case ErrorKind::BottomWithPatterns: return "BottomWithPatterns";
    case ErrorKind::NonBottomWithoutPatterns: return "NonBottomWithoutPatterns";
    case ErrorKind::UnknownConcept: return "UnknownConcept";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::BottomConcept: return "BottomConcept";
    case ErrorKind::NonBottomClamp: return "NonBottomClamp";
    case ErrorKind::EmptyScenario: return "EmptyScenario";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownField:
    case ErrorKind::MissingField:
    case ErrorKind::TypeMismatch:
    case ErrorKind::SchemaMismatch:
      return ErrorCategory::Parse;
    default:
      return ErrorCategory::Domain;
  }
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace concepts
