// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bwords/big_count.hpp"
#include "bwords/counting.hpp"
#include "bwords/word.hpp"

namespace bwords {

struct Rank {
  BigCount value;
  WordClass kind;
};

/// 1 + number of length-n words lexicographically smaller than w.
BigCount lex_rank(const Word& w);

// The rank functions accept any word, not only members of the class: the
// result is 1 + the number of class members smaller than w. Unranking
// relies on this when it probes padded prefixes.

/// 1 + sum_i sum_{c < w_i} B_k(w_1 ... w_{i-1} c, n).
Rank rank_bordered(const Word& w);

/// 2 + sum_i (w_i - 1) k^{n-i} - rank_bordered(w).
Rank rank_unbordered(const Word& w);

Rank rank(const Word& w, WordClass kind);

/// Rank evaluator bound to one (n, k), reusing a single counter across
/// calls. Words passed in must have length n and symbols in 1..k.
/// Not thread-safe.
class Ranker {
 public:
  Ranker(std::size_t n, unsigned k);

  BigCount bordered(std::span<const Symbol> w);
  BigCount unbordered(std::span<const Symbol> w);
  BigCount operator()(std::span<const Symbol> w, WordClass kind);

 private:
  BorderedPrefixCounter counter_;
  std::vector<Symbol> probe_;
};

}  // namespace bwords
