// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/ranking.hpp"

#include <cassert>

namespace bwords {

Ranker::Ranker(std::size_t n, unsigned k) : counter_(n, k), probe_(n) {}

BigCount Ranker::bordered(std::span<const Symbol> w) {
  assert(w.size() == counter_.length());
  probe_.assign(w.begin(), w.end());
  BigCount total = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Symbol c = 1; c < w[i]; ++c) {
      probe_[i] = c;
      total += counter_.count(std::span<const Symbol>(probe_).first(i + 1));
    }
    probe_[i] = w[i];
  }
  return total;
}

BigCount Ranker::unbordered(std::span<const Symbol> w) {
  assert(w.size() == counter_.length());
  const PowerTable& powers = counter_.powers();
  const std::size_t n = w.size();
  BigCount total = 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] > 1) total += powers(n - 1 - i) * (w[i] - 1);
  }
  total -= bordered(w);
  return total;
}

BigCount Ranker::operator()(std::span<const Symbol> w, WordClass kind) {
  return kind == WordClass::Bordered ? bordered(w) : unbordered(w);
}

BigCount lex_rank(const Word& w) {
  BigCount total = 0;
  for (Symbol s : w.symbols()) {
    total *= w.alphabet_size();
    total += s - 1;
  }
  return total + 1;
}

Rank rank_bordered(const Word& w) {
  Ranker ranker(w.size(), w.alphabet_size());
  return {ranker.bordered(w.symbols()), WordClass::Bordered};
}

Rank rank_unbordered(const Word& w) {
  Ranker ranker(w.size(), w.alphabet_size());
  return {ranker.unbordered(w.symbols()), WordClass::Unbordered};
}

Rank rank(const Word& w, WordClass kind) {
  Ranker ranker(w.size(), w.alphabet_size());
  return {ranker(w.symbols(), kind), kind};
}

}  // namespace bwords
