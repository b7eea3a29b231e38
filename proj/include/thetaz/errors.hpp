#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace thetaz {

/// Violated precondition or invalid domain data. `code()` is a stable
/// machine-readable identifier such as "InvalidSpine" or "WindowTooSmall".
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed textual input. `offset()` is the byte position of the problem.
class ParseFailure : public std::runtime_error {
public:
    ParseFailure(std::size_t offset, const std::string& message)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace thetaz
