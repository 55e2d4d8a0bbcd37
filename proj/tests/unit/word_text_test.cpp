// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/word_text.hpp"

#include <gtest/gtest.h>

#include "bwords/big_count.hpp"
#include "bwords/errors.hpp"
#include "test_support.hpp"

namespace bwords {
namespace {

using testing::make_word;

TEST(WordText, DigitsForSmallAlphabets) {
  EXPECT_EQ(parse_word("212", 2), make_word({2, 1, 2}, 2));
  EXPECT_EQ(render_word(make_word({9, 1, 5}, 9)), "915");
  EXPECT_THROW(parse_word("213", 2), ParseError);
  EXPECT_THROW(parse_word("202", 2), ParseError);
  EXPECT_THROW(parse_word("2,1", 2), ParseError);
  EXPECT_THROW(parse_word("", 2), ParseError);
}

TEST(WordText, CommasForLargeAlphabets) {
  EXPECT_EQ(parse_word("2,1,12", 12), make_word({2, 1, 12}, 12));
  EXPECT_EQ(render_word(make_word({2, 1, 12}, 12)), "2,1,12");
  EXPECT_EQ(parse_word("7", 10), make_word({7}, 10));
  EXPECT_THROW(parse_word("2,,1", 12), ParseError);
  EXPECT_THROW(parse_word("2,13", 12), ParseError);
  EXPECT_THROW(parse_word("2,1,", 12), ParseError);
  EXPECT_THROW(parse_word("2;1", 12), ParseError);
}

TEST(WordText, RejectsSingletonAlphabet) { EXPECT_THROW(parse_word("1", 1), DomainError); }

TEST(WordText, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(rng() % 30);
    const Word w = testing::random_word(1 + rng() % 20, k, rng);
    ASSERT_EQ(parse_word(render_word(w), k), w);
  }
}

TEST(Decimal, ParseAndRender) {
  const BigCount big = parse_decimal("123456789012345678901234567890");
  EXPECT_EQ(to_decimal(big), "123456789012345678901234567890");
  EXPECT_THROW(parse_decimal("-3"), ParseError);
  EXPECT_THROW(parse_decimal("1e5"), ParseError);
  EXPECT_THROW(parse_decimal(""), ParseError);
}

}  // namespace
}  // namespace bwords
