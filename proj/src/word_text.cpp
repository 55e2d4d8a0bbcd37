// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/word_text.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "bwords/errors.hpp"

namespace bwords {

namespace {

Symbol checked_symbol(std::uint64_t value, unsigned k, std::string_view text) {
  if (value < 1 || value > k) {
    throw ParseError("symbol " + std::to_string(value) + " in '" + std::string(text) +
                     "' is outside 1.." + std::to_string(k));
  }
  return static_cast<Symbol>(value);
}

}  // namespace

Word parse_word(std::string_view text, unsigned k) {
  require_alphabet(k);
  if (text.empty()) {
    throw ParseError("empty word");
  }
  std::vector<Symbol> symbols;
  if (k <= 9) {
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError("expected a digit string for k <= 9, got '" + std::string(text) + "'");
      }
      symbols.push_back(checked_symbol(static_cast<std::uint64_t>(c - '0'), k, text));
    }
    return Word(std::move(symbols), k);
  }

  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw ParseError("malformed symbol '" + std::string(field) + "' in '" + std::string(text) + "'");
    }
    symbols.push_back(checked_symbol(value, k, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(symbols), k);
}

std::string render_word(const Word& w) {
  std::string out;
  if (w.alphabet_size() <= 9) {
    out.reserve(w.size());
    for (Symbol s : w.symbols()) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace bwords
