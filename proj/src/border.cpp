// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/border.hpp"

#include <algorithm>
#include <cassert>

namespace bwords {

namespace detail {

void fill_lps(std::span<const Symbol> w, std::span<std::size_t> lps) {
  assert(lps.size() == w.size());
  if (w.empty()) return;
  lps[0] = 0;
  std::size_t len = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (len > 0 && w[i] != w[len]) len = lps[len - 1];
    if (w[i] == w[len]) ++len;
    lps[i] = len;
  }
}

void fill_unbordered_prefix(std::span<const std::size_t> lps, std::span<std::uint8_t> bits) {
  assert(bits.size() == lps.size());
  std::transform(lps.begin(), lps.end(), bits.begin(),
                 [](std::size_t l) { return static_cast<std::uint8_t>(l == 0); });
}

void fill_border(std::span<const std::size_t> lps, std::span<std::uint8_t> bits) {
  assert(bits.size() == lps.size());
  std::fill(bits.begin(), bits.end(), std::uint8_t{0});
  if (lps.empty()) return;
  for (std::size_t len = lps.back(); len > 0; len = lps[len - 1]) {
    bits[len - 1] = 1;
  }
}

}  // namespace detail

PrefixBorderArray compute_lps(const Word& w) {
  PrefixBorderArray out{std::vector<std::size_t>(w.size())};
  detail::fill_lps(w.symbols(), out.lengths);
  return out;
}

IndicatorArray unbordered_prefix_indicator(const Word& w) {
  const auto lps = compute_lps(w);
  IndicatorArray out{IndicatorRole::UnborderedPrefix, std::vector<std::uint8_t>(w.size())};
  detail::fill_unbordered_prefix(lps.lengths, out.bits);
  return out;
}

IndicatorArray border_indicator(const Word& w) {
  const auto lps = compute_lps(w);
  IndicatorArray out{IndicatorRole::Border, std::vector<std::uint8_t>(w.size())};
  detail::fill_border(lps.lengths, out.bits);
  return out;
}

bool is_bordered(const Word& w) { return compute_lps(w).lengths.back() > 0; }

}  // namespace bwords
