#pragma once

#include <stdexcept>
#include <string>

namespace hqmap {

/// Base of every error the library throws. `name()` is the stable identifier
/// the CLI prints (e.g. "NotAdmissible"); `what()` is the human explanation.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name))
    {
    }

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Input violates a mathematical precondition or an operation cannot produce a result.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a file line.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : Error("ParseError", line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace hqmap
