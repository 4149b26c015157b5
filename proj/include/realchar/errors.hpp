#pragma once

#include <stdexcept>
#include <string>

namespace realchar {

// Resource caps (enumeration size, coset index, degree): CLI exit code 3.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Descriptor syntax / unsupported parameters: CLI exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed; indicates a bug, never a bad input.
struct IntegrityError : std::logic_error {
  explicit IntegrityError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace realchar
