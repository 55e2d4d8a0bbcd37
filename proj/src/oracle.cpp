// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/oracle.hpp"

#include <algorithm>
#include <string>

#include "bwords/errors.hpp"

namespace bwords::oracle {

namespace {

bool has_border_of_length(std::span<const Symbol> w, std::size_t len) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len),
                    w.end() - static_cast<std::ptrdiff_t>(len));
}

// Calls visit(symbols) for every word of length m over 1..k in lexicographic order.
template <typename Visit>
void for_each_word(std::size_t m, unsigned k, Visit&& visit) {
  std::vector<Symbol> w(m, 1);
  while (true) {
    visit(static_cast<const std::vector<Symbol>&>(w));
    std::size_t i = m;
    while (i > 0 && w[i - 1] == k) {
      w[i - 1] = 1;
      --i;
    }
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace

std::uint64_t checked_word_count(std::size_t n, unsigned k) {
  require_alphabet(k);
  require_length(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= k;
    if (total > kMaxEnumeratedWords) {
      throw DomainError(ErrorKind::InstanceTooLarge,
                        "k^n exceeds the enumeration guard of 2^24 words (n = " +
                            std::to_string(n) + ", k = " + std::to_string(k) + ")");
    }
  }
  return total;
}

bool is_bordered_naive(const Word& w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (has_border_of_length(w.symbols(), len)) return true;
  }
  return false;
}

std::vector<std::size_t> lps_naive(const Word& w) {
  std::vector<std::size_t> out(w.size(), 0);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const auto prefix = w.symbols().first(i);
    for (std::size_t len = i - 1; len > 0; --len) {
      if (has_border_of_length(prefix, len)) {
        out[i - 1] = len;
        break;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> unbordered_prefix_naive(const Word& w) {
  std::vector<std::uint8_t> out(w.size(), 1);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const auto prefix = w.symbols().first(i);
    for (std::size_t len = 1; len < i; ++len) {
      if (has_border_of_length(prefix, len)) {
        out[i - 1] = 0;
        break;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> border_indicator_naive(const Word& w) {
  std::vector<std::uint8_t> out(w.size(), 0);
  for (std::size_t len = 1; len < w.size(); ++len) {
    out[len - 1] = has_border_of_length(w.symbols(), len) ? 1 : 0;
  }
  return out;
}

Rank ClassListing::rank_of(const Word& w) const {
  const auto pos = std::lower_bound(words.begin(), words.end(), w);
  return {BigCount(static_cast<unsigned long>(pos - words.begin()) + 1), kind};
}

ClassListing enumerate_class(std::size_t n, unsigned k, WordClass kind) {
  checked_word_count(n, k);
  ClassListing listing{n, k, kind, {}};
  const bool want_bordered = kind == WordClass::Bordered;
  for_each_word(n, k, [&](const std::vector<Symbol>& symbols) {
    Word w(symbols, k);
    if (is_bordered_naive(w) == want_bordered) listing.words.push_back(std::move(w));
  });
  return listing;
}

Rank rank_naive(const Word& w, WordClass kind) {
  return enumerate_class(w.size(), w.alphabet_size(), kind).rank_of(w);
}

BigCount count_bordered_completions_naive(const Word& prefix, std::size_t n) {
  if (prefix.size() > n) {
    throw DomainError(ErrorKind::InvalidLength, "prefix longer than n");
  }
  const unsigned k = prefix.alphabet_size();
  checked_word_count(n, k);
  const std::size_t tail = n - prefix.size();
  std::vector<Symbol> symbols(prefix.symbols().begin(), prefix.symbols().end());
  symbols.resize(n);
  unsigned long total = 0;
  if (tail == 0) return BigCount(is_bordered_naive(prefix) ? 1UL : 0UL);
  for_each_word(tail, k, [&](const std::vector<Symbol>& rest) {
    std::copy(rest.begin(), rest.end(), symbols.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
    if (is_bordered_naive(Word(symbols, k))) ++total;
  });
  return BigCount(total);
}

}  // namespace bwords::oracle
