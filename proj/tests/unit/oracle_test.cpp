// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "bwords/errors.hpp"
#include "test_support.hpp"

namespace bwords::oracle {
namespace {

using testing::make_word;

std::vector<Word> words(std::initializer_list<std::vector<Symbol>> list, unsigned k) {
  std::vector<Word> out;
  for (const auto& s : list) out.emplace_back(s, k);
  return out;
}

TEST(IsBorderedNaive, Examples) {
  // "alfalfa" with a -> 1, l -> 2, f -> 3.
  EXPECT_TRUE(is_bordered_naive(make_word({1, 2, 3, 1, 2, 3, 1}, 3)));
  EXPECT_FALSE(is_bordered_naive(make_word({1, 2}, 2)));
  EXPECT_TRUE(is_bordered_naive(make_word({2, 1, 2}, 2)));
  EXPECT_FALSE(is_bordered_naive(make_word({2}, 2)));
}

TEST(EnumerateClass, Examples) {
  EXPECT_EQ(enumerate_class(3, 2, WordClass::Bordered).words,
            words({{1, 1, 1}, {1, 2, 1}, {2, 1, 2}, {2, 2, 2}}, 2));
  EXPECT_TRUE(enumerate_class(1, 2, WordClass::Bordered).words.empty());
  EXPECT_EQ(enumerate_class(2, 2, WordClass::Unbordered).words, words({{1, 2}, {2, 1}}, 2));
}

TEST(EnumerateClass, SortedAndPartitioned) {
  const auto b = enumerate_class(6, 3, WordClass::Bordered);
  const auto u = enumerate_class(6, 3, WordClass::Unbordered);
  EXPECT_TRUE(std::is_sorted(b.words.begin(), b.words.end()));
  EXPECT_TRUE(std::adjacent_find(b.words.begin(), b.words.end()) == b.words.end());
  EXPECT_EQ(b.words.size() + u.words.size(), 729u);
  for (const auto& w : u.words) EXPECT_FALSE(is_bordered_naive(w));
}

TEST(EnumerateClass, Guard) {
  EXPECT_EQ(checked_word_count(24, 2), std::uint64_t{1} << 24);
  try {
    enumerate_class(25, 2, WordClass::Bordered);
    FAIL() << "expected InstanceTooLarge";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InstanceTooLarge);
  }
  EXPECT_THROW(rank_naive(Word::ones(40, 3), WordClass::Bordered), DomainError);
}

TEST(RankNaive, Examples) {
  EXPECT_EQ(rank_naive(make_word({2, 1, 2}, 2), WordClass::Bordered).value, 3);
  EXPECT_EQ(rank_naive(make_word({1, 1, 1}, 2), WordClass::Bordered).value, 1);
  EXPECT_EQ(rank_naive(make_word({2, 2, 1}, 2), WordClass::Unbordered).value, 4);
}

TEST(CompletionCount, MatchesHandCounts) {
  EXPECT_EQ(count_bordered_completions_naive(make_word({1, 2}, 2), 4), 3);
  EXPECT_EQ(count_bordered_completions_naive(make_word({1, 2, 1}, 2), 3), 1);
  EXPECT_THROW(count_bordered_completions_naive(make_word({1, 2, 1}, 2), 2), DomainError);
}

}  // namespace
}  // namespace bwords::oracle
