// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/border.hpp"

#include <gtest/gtest.h>

#include "bwords/errors.hpp"
#include "bwords/oracle.hpp"
#include "test_support.hpp"

namespace bwords {
namespace {

using testing::for_each_word;
using testing::make_word;
using Bits = std::vector<std::uint8_t>;
using Lengths = std::vector<std::size_t>;

// 011101110 with 0 -> 1, 1 -> 2.
const Word kExample = make_word({1, 2, 2, 2, 1, 2, 2, 2, 1}, 2);

TEST(Word, RejectsBadConstruction) {
  EXPECT_THROW(make_word({1, 1}, 1), DomainError);
  EXPECT_THROW(make_word({}, 2), DomainError);
  EXPECT_THROW(make_word({1, 3}, 2), DomainError);
  EXPECT_THROW(make_word({0}, 2), DomainError);
  try {
    make_word({1}, 1);
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAlphabet);
  }
}

TEST(Word, OrdersLexicographically) {
  EXPECT_LT(make_word({1, 2, 2}, 2), make_word({2, 1, 1}, 2));
  EXPECT_LT(make_word({1, 2}, 2), make_word({1, 2, 1}, 2));
  EXPECT_EQ(Word::ones(3, 2), make_word({1, 1, 1}, 2));
  EXPECT_EQ(kExample.at(2), 2u);
}

TEST(ComputeLps, Examples) {
  EXPECT_EQ(compute_lps(make_word({1, 1, 1}, 2)).lengths, (Lengths{0, 1, 2}));
  EXPECT_EQ(compute_lps(kExample).lengths, (Lengths{0, 0, 0, 0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(compute_lps(make_word({1, 2}, 2)).lengths, (Lengths{0, 0}));
}

TEST(UnborderedPrefixIndicator, Examples) {
  const auto a = unbordered_prefix_indicator(kExample);
  EXPECT_EQ(a.role, IndicatorRole::UnborderedPrefix);
  EXPECT_EQ(a.bits, (Bits{1, 1, 1, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(unbordered_prefix_indicator(make_word({1, 1, 1, 1}, 2)).bits, (Bits{1, 0, 0, 0}));
  EXPECT_EQ(unbordered_prefix_indicator(make_word({1, 2, 2}, 2)).bits, (Bits{1, 1, 1}));
}

TEST(BorderIndicator, Examples) {
  const auto b = border_indicator(kExample);
  EXPECT_EQ(b.role, IndicatorRole::Border);
  EXPECT_EQ(b.bits, (Bits{1, 0, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(b.at(5));
  EXPECT_EQ(border_indicator(make_word({1, 2}, 2)).bits, (Bits{0, 0}));
  EXPECT_EQ(border_indicator(make_word({1, 1, 1}, 2)).bits, (Bits{1, 1, 0}));
  EXPECT_EQ(border_indicator(make_word({3}, 3)).bits, (Bits{0}));
}

TEST(IsBordered, Examples) {
  EXPECT_FALSE(is_bordered(make_word({1}, 2)));
  EXPECT_FALSE(is_bordered(make_word({3}, 5)));
  EXPECT_TRUE(is_bordered(kExample));
  EXPECT_FALSE(is_bordered(make_word({1, 2, 2}, 2)));
}

// Every binary word up to length 12 and every ternary word up to length 8:
// all three arrays agree with the quadratic recomputation, the LPS shape
// invariants hold, and the shortest border is unbordered and at most n/2.
TEST(BorderProperties, ExhaustiveAgainstNaive) {
  for (unsigned k : {2u, 3u}) {
    const std::size_t max_n = k == 2 ? 12 : 8;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for_each_word(n, k, [&](const Word& w) {
        const auto lps = compute_lps(w);
        const auto a = unbordered_prefix_indicator(w);
        const auto b = border_indicator(w);
        ASSERT_EQ(lps.lengths, oracle::lps_naive(w));
        ASSERT_EQ(a.bits, oracle::unbordered_prefix_naive(w));
        ASSERT_EQ(b.bits, oracle::border_indicator_naive(w));
        ASSERT_EQ(is_bordered(w), oracle::is_bordered_naive(w));

        ASSERT_EQ(lps.at(1), 0u);
        ASSERT_TRUE(a.at(1));
        ASSERT_FALSE(b.at(n));
        for (std::size_t i = 1; i <= n; ++i) {
          ASSERT_LT(lps.at(i), i);
          ASSERT_EQ(a.at(i), lps.at(i) == 0);
          if (i < n) ASSERT_LE(lps.at(i + 1), lps.at(i) + 1);
        }

        if (!is_bordered(w)) return;
        std::size_t shortest = 1;
        while (!b.at(shortest)) ++shortest;
        ASSERT_TRUE(a.at(shortest));
        ASSERT_LE(2 * shortest, n);
      });
    }
  }
}

TEST(BorderProperties, RandomLongWords) {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng() % 3);
    // Mostly-periodic words exercise long border chains.
    const std::size_t period = 1 + rng() % 5;
    const std::size_t n = 20 + rng() % 60;
    auto base = testing::random_word(period, k, rng);
    std::vector<Symbol> symbols(n);
    for (std::size_t i = 0; i < n; ++i) symbols[i] = base[i % period];
    if (trial % 3 == 0) symbols[rng() % n] = 1 + static_cast<Symbol>(rng() % k);
    const Word w(symbols, k);
    ASSERT_EQ(compute_lps(w).lengths, oracle::lps_naive(w));
    ASSERT_EQ(border_indicator(w).bits, oracle::border_indicator_naive(w));
  }
}

}  // namespace
}  // namespace bwords
