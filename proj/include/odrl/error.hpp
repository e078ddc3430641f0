#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace odrl {

enum class ErrorKind {
    ClosureContradiction,
    DomainViolation,
    UnknownConcept,
    UnknownOperator,
    UngroundedConstraint,
    OperandMismatch,
    ConfigError,
    AlignmentInvalid,
    ParseError,
    ValidationError,
    UnrecognizedToken,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (CLI, bindings) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    // The description without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace odrl
