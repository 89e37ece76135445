#pragma once

#include <stdexcept>
#include <string>

namespace gtlie {

/// Operands live over different alphabets or truncation degrees.
class ContextMismatch : public std::invalid_argument {
public:
    explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its domain (e.g. log of a series with
/// counit != 1, ⋔ of a series with a constant term).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gtlie
