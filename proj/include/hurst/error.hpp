#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hurst {

/// Broad failure categories. The CLI maps these onto exit codes.
enum class ErrorKind {
    InvalidArgument,
    DegenerateInput,
    InsufficientData,
    EmbeddingFailure,
    Parse,
    Ordering,
};

[[nodiscard]] const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(ErrorKind::DegenerateInput, what) {}
};

class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& what) : Error(ErrorKind::InsufficientData, what) {}
};

class EmbeddingFailure : public Error {
public:
    explicit EmbeddingFailure(const std::string& what) : Error(ErrorKind::EmbeddingFailure, what) {}
};

/// Malformed or out-of-order input line. `line()` is 1-based.
class LineError : public Error {
public:
    LineError(ErrorKind kind, std::size_t line, const std::string& what)
        : Error(kind, "line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    /// The message without the line prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

}  // namespace hurst
