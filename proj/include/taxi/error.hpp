#pragma once

#include <stdexcept>
#include <string>

namespace taxi {

/// Collinear, duplicate or otherwise degenerate triangle input.
class InvalidTriangle : public std::invalid_argument {
public:
    explicit InvalidTriangle(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Two computations that must agree did not. Always a bug or a violated
/// precondition upstream; the CLI maps this to exit code 2.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace taxi
