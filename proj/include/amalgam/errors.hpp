#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

// Malformed text input (parse errors, bad file headers). CLI maps this to exit 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called on data that violates its preconditions.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A self-check inside a construction failed. This always indicates a bug,
// never bad input, and is deliberately loud.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace amalgam
