// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/word.hpp"

#include <string>
#include <utility>

#include "bwords/errors.hpp"

namespace bwords {

std::string_view to_string(WordClass kind) noexcept {
  return kind == WordClass::Bordered ? "bordered" : "unbordered";
}

void require_alphabet(unsigned k) {
  if (k < 2) {
    throw DomainError(ErrorKind::InvalidAlphabet,
                      "alphabet size must be at least 2, got " + std::to_string(k));
  }
}

void require_length(std::size_t n) {
  if (n == 0) {
    throw DomainError(ErrorKind::InvalidLength, "word length must be at least 1");
  }
}

Word::Word(std::vector<Symbol> symbols, unsigned k) : symbols_(std::move(symbols)), k_(k) {
  require_alphabet(k);
  require_length(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] < 1 || symbols_[i] > k) {
      throw DomainError(ErrorKind::InvalidSymbol,
                        "symbol " + std::to_string(symbols_[i]) + " at position " +
                            std::to_string(i + 1) + " is outside 1.." + std::to_string(k));
    }
  }
}

Word Word::ones(std::size_t n, unsigned k) { return Word(std::vector<Symbol>(n, 1), k); }

}  // namespace bwords
