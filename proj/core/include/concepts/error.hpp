#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace concepts {

enum class ErrorKind {
  // Input could not be read or is malformed (usage/parse category).
  IoError,
  SyntaxError,
  UnknownField,
  MissingField,
  TypeMismatch,
  SchemaMismatch,
  // Structurally readable input that violates a domain rule.
  EmptyName,
  DuplicateName,
  DanglingReference,
  LayerViolation,
  EmptyPattern,
  DuplicateElement,
  DuplicatePattern,
  BottomWithPatterns,
  NonBottomWithoutPatterns,
  UnknownConcept,
  UnknownElement,
  BottomConcept,
  NonBottomClamp,
  EmptyScenario,
  BadParams,
  TooLarge,
};

enum class ErrorCategory { Parse, Domain };

std::string_view to_string(ErrorKind kind);
ErrorCategory category_of(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and machine-checkable;
/// the message names the offending item (and a location for parse errors).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace concepts
