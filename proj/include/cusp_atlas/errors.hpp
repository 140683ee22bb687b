// Error categories shared by the library and the command-line front end.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cusp_atlas {

// Malformed input document: wrong types, unknown fields, missing keys.
// Carries a JSON pointer to the offending location.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& message)
        : std::runtime_error(message), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// Well-formed input that violates a mathematical precondition
// (parity rule, dimension mismatch, non-distinguished partition, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations disagree. Always a bug, never user error.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cusp_atlas
