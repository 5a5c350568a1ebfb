#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace surf4 {

/// Broad failure category. The CLI maps Input to exit code 1 and Numeric to 2.
enum class ErrorKind { Input, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed expression text. `offset` is a byte offset into the source.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, const std::string& detail = {})
        : Error(ErrorKind::Input, format(offset, expected, detail)),
          offset_(offset),
          expected_(std::move(expected)) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
    [[nodiscard]] const std::string& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t offset, const std::string& expected,
                              const std::string& detail) {
        std::string msg = "syntax error at byte " + std::to_string(offset);
        if (!detail.empty()) msg += ": " + detail;
        if (!expected.empty()) msg += " (expected " + expected + ")";
        return msg;
    }

    std::size_t offset_;
    std::string expected_;
};

/// Invalid surface spec, bad URI, bad JSON, unbound constant, bad request.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

/// Evaluation outside a function's real domain (ln of non-positive, 0^-n, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

/// Degenerate parametrization, undefined conjugate, degenerate direction field or frame.
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

/// A quantity that must be real came out clearly complex (beyond clamping tolerance).
class NumericInconsistency : public Error {
public:
    explicit NumericInconsistency(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

/// Asymptotic field requested at an elliptic point.
class NoRealDirection : public Error {
public:
    explicit NoRealDirection(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

/// Too few valid Frenet samples for a constancy decision.
class InsufficientSamples : public Error {
public:
    explicit InsufficientSamples(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

}  // namespace surf4
