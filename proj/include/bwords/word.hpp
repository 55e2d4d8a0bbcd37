// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bwords {

/// A letter of the alphabet {1, ..., k}.
using Symbol = std::uint32_t;

enum class WordClass { Bordered, Unbordered };

std::string_view to_string(WordClass kind) noexcept;

/// Throws DomainError(InvalidAlphabet) when k < 2.
void require_alphabet(unsigned k);

/// Throws DomainError(InvalidLength) when n == 0.
void require_length(std::size_t n);

/// Non-empty word over {1, ..., k} with k >= 2.
///
/// Storage is 0-based; operator[] follows the storage, at() is 1-based to
/// match the usual w_1 w_2 ... w_n notation.
class Word {
 public:
  /// Throws DomainError on k < 2, an empty word, or a symbol outside 1..k.
  Word(std::vector<Symbol> symbols, unsigned k);

  /// The word 1^n.
  static Word ones(std::size_t n, unsigned k);

  std::size_t size() const noexcept { return symbols_.size(); }
  unsigned alphabet_size() const noexcept { return k_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  Symbol operator[](std::size_t index) const { return symbols_[index]; }
  Symbol at(std::size_t position) const { return symbols_.at(position - 1); }

  /// Lexicographic; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.symbols_ <=> rhs.symbols_;
  }
  friend bool operator==(const Word& lhs, const Word& rhs) = default;

 private:
  std::vector<Symbol> symbols_;
  unsigned k_;
};

}  // namespace bwords
