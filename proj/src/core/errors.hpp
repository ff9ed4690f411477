#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mts {

/// Invalid input or configuration. `field()` names the offending field so
/// callers can report file-level diagnostics.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

/// Exhaustive enumeration refused: the instance needs a larger cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("enumeration needs " + std::to_string(required) +
                             " sequences, cap is " + std::to_string(cap)),
          required_(required), cap_(cap) {}

    std::uint64_t required_cap() const { return required_; }
    std::uint64_t configured_cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

} // namespace mts
