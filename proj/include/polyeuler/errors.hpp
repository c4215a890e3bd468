#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyeuler {

/// Error classes surfaced to callers and mapped to CLI exit codes.
enum class ErrorKind { input, resource, regularization, internal };

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed user input: bad literal, bad argument, unsupported domain.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// An enumeration would exceed its configured cap.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

/// The series has no regularized value: no verified recurrence, or a pole at t=1.
class RegularizationError : public Error {
public:
    explicit RegularizationError(const std::string& what)
        : Error(ErrorKind::regularization, what) {}
};

/// Two routes that must agree did not. Always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace polyeuler
