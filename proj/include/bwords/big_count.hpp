// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace bwords {

/// Exact non-negative counts and ranks. Values reach k^n.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& value);

/// Throws ParseError unless `text` is a plain base-10 non-negative integer.
BigCount parse_decimal(const std::string& text);

/// k^0, k^1, ..., k^max_exponent, built by repeated multiplication.
class PowerTable {
 public:
  PowerTable(unsigned k, std::size_t max_exponent);

  const BigCount& operator()(std::size_t exponent) const { return powers_[exponent]; }
  std::size_t max_exponent() const noexcept { return powers_.size() - 1; }

 private:
  std::vector<BigCount> powers_;
};

}  // namespace bwords
