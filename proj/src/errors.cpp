// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/errors.hpp"

namespace bwords {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

DomainError::DomainError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace bwords
