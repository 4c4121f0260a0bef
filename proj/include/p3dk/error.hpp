// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p3dk {

// Each error kind maps onto one CLI exit code (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeedError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class KeyFormatError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Corrupted symbol triple. `position()` is the triple index inside its
/// 93-byte block, or npos when the error was raised for a lone triple.
class IntegrityError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit IntegrityError(const std::string &what, std::size_t position = npos)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Depth symbol that no byte can produce at the given position.
class DepthRangeError : public RangeError {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit DepthRangeError(const std::string &what, std::size_t position = npos)
      : RangeError(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace p3dk
