#pragma once

#include <stdexcept>
#include <string>

namespace ams {

/// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
    invalid_argument,
    io,
    parse,
    dimension_mismatch,
    not_spd,
    singular,
    breakdown,
    no_convergence,
    structure,
    unsupported,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure carrying the 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(long line, const std::string& message)
        : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

}  // namespace ams
