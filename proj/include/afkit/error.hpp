#pragma once

#include <stdexcept>
#include <string>

namespace afkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a precondition (unknown argument, bad name, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Enumeration refused because the framework exceeds the argument cap.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Verification data is less informative than the semantics requires.
class InsufficientClass : public Error {
public:
    using Error::Error;
};

// An internal self-check failed.
class Defect : public Error {
public:
    using Error::Error;
};

}  // namespace afkit
