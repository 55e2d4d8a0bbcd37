// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/big_count.hpp"

#include <algorithm>
#include <cctype>

#include "bwords/errors.hpp"

namespace bwords {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

BigCount parse_decimal(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("expected a non-negative decimal integer, got '" + text + "'");
  }
  return BigCount(text, 10);
}

PowerTable::PowerTable(unsigned k, std::size_t max_exponent) : powers_(max_exponent + 1) {
  powers_[0] = 1;
  for (std::size_t j = 1; j <= max_exponent; ++j) {
    powers_[j] = powers_[j - 1] * k;
  }
}

}  // namespace bwords
