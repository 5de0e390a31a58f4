#pragma once

#include <stdexcept>
#include <string>

namespace pipcat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The order relation closes to a cycle (antisymmetry fails).
class CycleError : public Error {
public:
    using Error::Error;
};

/// Upward inheritance forces some element to be inconsistent with itself.
class SelfInconsistentError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// An enumeration or construction would exceed the configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotAFace : public Error {
public:
    using Error::Error;
};

/// An abstract cubical complex failed structural validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidColoring : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A bounded generator or search gave up.
class ReportError : public Error {
public:
    using Error::Error;
};

}  // namespace pipcat
