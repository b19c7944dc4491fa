#pragma once

#include <stdexcept>
#include <string>

namespace fmw {

// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: unknown element, signature mismatch, bad file.
class InputError : public Error {
public:
    using Error::Error;
};

// Syntax error in formula text, with 1-based position.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line, int column)
        : InputError(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Caller broke an operation's contract (e.g. non-bijective map handed to an isomorphism check).
class ContractError : public Error {
public:
    using Error::Error;
};

// A structural precondition of an algorithm does not hold (e.g. non-transitive base).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured search or size cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace fmw
