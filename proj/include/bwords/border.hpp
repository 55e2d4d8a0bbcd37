// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bwords/word.hpp"

namespace bwords {

/// KMP failure function. Entry i (1-based) is the length of the longest
/// border of the prefix w_1 ... w_i, or 0 if that prefix is unbordered.
struct PrefixBorderArray {
  std::vector<std::size_t> lengths;  // lengths[i - 1] holds entry i

  std::size_t size() const noexcept { return lengths.size(); }
  std::size_t at(std::size_t i) const { return lengths.at(i - 1); }
};

enum class IndicatorRole { UnborderedPrefix, Border };

/// Bit array indexed 1..n.
///
/// UnborderedPrefix: bit i is set iff w_1 ... w_i is unbordered.
/// Border: bit i is set iff w has a border of length i; bit n is always 0.
struct IndicatorArray {
  IndicatorRole role;
  std::vector<std::uint8_t> bits;  // bits[i - 1] holds entry i

  std::size_t size() const noexcept { return bits.size(); }
  bool at(std::size_t i) const { return bits.at(i - 1) != 0; }
};

PrefixBorderArray compute_lps(const Word& w);
IndicatorArray unbordered_prefix_indicator(const Word& w);
IndicatorArray border_indicator(const Word& w);
bool is_bordered(const Word& w);

namespace detail {

// Span-based kernels with caller-owned output, so hot loops can reuse
// buffers. Outputs must have the same length as `w`; 0-based storage.
void fill_lps(std::span<const Symbol> w, std::span<std::size_t> lps);

// Needs the LPS of the same word.
void fill_unbordered_prefix(std::span<const std::size_t> lps, std::span<std::uint8_t> bits);

// Walks the border chain lps[n], lps[lps[n]], ...; those are exactly the
// border lengths of w.
void fill_border(std::span<const std::size_t> lps, std::span<std::uint8_t> bits);

}  // namespace detail

}  // namespace bwords
