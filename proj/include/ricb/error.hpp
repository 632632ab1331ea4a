// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ricb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside an operation's admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A reference-table cell or named item does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (reference assets, option values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ricb
