/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropext {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::size_t position_;
};

/// Invalid operand for a mathematically defined operation (inverse of zero, rank mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// A truncated series does not determine the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precision"; }
};

/// The exact solver cannot handle this instance (irrational base roots, unsupported shape).
class UnsupportedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported"; }
};

}  // namespace tropext
