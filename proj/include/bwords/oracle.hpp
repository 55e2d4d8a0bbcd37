// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference implementations. Nothing here calls into the
// border, counting, ranking or unranking code.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bwords/big_count.hpp"
#include "bwords/ranking.hpp"
#include "bwords/word.hpp"

namespace bwords::oracle {

/// Largest k^n that enumerate_class will materialise.
inline constexpr std::uint64_t kMaxEnumeratedWords = std::uint64_t{1} << 24;

/// Throws DomainError(InstanceTooLarge) when k^n exceeds the guard.
std::uint64_t checked_word_count(std::size_t n, unsigned k);

/// Direct prefix/suffix comparison for every candidate length.
bool is_bordered_naive(const Word& w);

/// Entry i: longest border of w_1..w_i, found by trying every length.
std::vector<std::size_t> lps_naive(const Word& w);
std::vector<std::uint8_t> unbordered_prefix_naive(const Word& w);
std::vector<std::uint8_t> border_indicator_naive(const Word& w);

/// Sorted listing of all length-n words of one class.
struct ClassListing {
  std::size_t n;
  unsigned k;
  WordClass kind;
  std::vector<Word> words;

  /// 1 + number of members strictly smaller than w.
  Rank rank_of(const Word& w) const;
};

ClassListing enumerate_class(std::size_t n, unsigned k, WordClass kind);

Rank rank_naive(const Word& w, WordClass kind);

/// Bordered words of length n with `prefix` as a prefix, by enumerating
/// all k^{n-|prefix|} completions.
BigCount count_bordered_completions_naive(const Word& prefix, std::size_t n);

}  // namespace bwords::oracle
