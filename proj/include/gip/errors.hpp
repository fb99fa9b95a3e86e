#pragma once

#include <stdexcept>
#include <string>

namespace gip {

enum class ErrorKind {
    invalid_dimension,
    missing_buffer,
    index_out_of_range,
    shape_mismatch,
    domain,
    empty_input,
    invalid_range,
    invalid_argument,
    insufficient_data,
    undefined_correlation,
    degenerate,
    pairing,
    format,
    io,
    syntax,
    unknown_op,
    arity_mismatch,
    unbound_variable,
    usage,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Script errors carry the 1-based source position of the offending statement
// or token.
class ScriptError : public Error {
public:
    ScriptError(ErrorKind kind, const std::string& message, int line, int column)
        : Error(kind, message + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Format errors carry the byte offset where a malformed file was rejected.
class FormatError : public Error {
public:
    FormatError(const std::string& message, long long byteOffset)
        : Error(ErrorKind::format,
                message + " (byte offset " + std::to_string(byteOffset) + ")"),
          byteOffset_(byteOffset) {}

    long long byteOffset() const { return byteOffset_; }

private:
    long long byteOffset_;
};

} // namespace gip
