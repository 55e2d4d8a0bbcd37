// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bwords {

enum class ErrorKind {
  InvalidAlphabet,
  InvalidLength,
  InvalidSymbol,
  RankOutOfRange,
  EmptyClass,
  InstanceTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised when a request is well-formed but has no answer in the domain
/// (alphabet too small, rank outside the listing, empty class, ...).
/// what() is prefixed with the kind name, e.g. "RankOutOfRange: ...".
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text protocol when a word or number cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bwords
