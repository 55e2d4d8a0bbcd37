// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/counting.hpp"

#include <string>

#include "bwords/border.hpp"
#include "bwords/errors.hpp"

namespace bwords {

namespace {

unsigned checked_alphabet(std::size_t n, unsigned k) {
  require_alphabet(k);
  require_length(n);
  return k;
}

}  // namespace

BorderedPrefixCounter::BorderedPrefixCounter(std::size_t n, unsigned k)
    : n_(n), k_(k), powers_(checked_alphabet(n, k), n), table_(n / 2 + 1) {
  lps_.reserve(n);
  unbordered_.reserve(n);
  border_.reserve(n);
}

const BigCount& BorderedPrefixCounter::count(std::span<const Symbol> prefix) {
  if (prefix.empty() || prefix.size() > n_) {
    throw DomainError(ErrorKind::InvalidLength,
                      "prefix length " + std::to_string(prefix.size()) + " must lie in 1.." +
                          std::to_string(n_));
  }
  p_ = prefix.size();
  lps_.resize(p_);
  unbordered_.resize(p_);
  border_.resize(p_);
  detail::fill_lps(prefix, lps_);
  detail::fill_unbordered_prefix(lps_, unbordered_);
  detail::fill_border(lps_, border_);

  if (n_ > 2 * p_) {
    for (std::size_t m = p_ + 1; m <= n_ / 2; ++m) evaluate(m, table_[m]);
  }
  evaluate(n_, result_);
  return result_;
}

void BorderedPrefixCounter::evaluate(std::size_t m, BigCount& out) {
  const std::size_t p = p_;
  const std::size_t half = m / 2;
  out = 0;
  // 1-based indicator access: a(i) = unbordered_[i - 1], b(i) = border_[i - 1].
  if (m <= 2 * p) {
    const std::size_t overhang = m - p;
    for (std::size_t i = 1; i <= overhang; ++i) {
      if (unbordered_[i - 1]) out += powers_(m - p - i);
    }
    for (std::size_t i = overhang + 1; i <= half; ++i) {
      if (unbordered_[i - 1] && border_[i - overhang - 1]) out += 1;
    }
    return;
  }
  for (std::size_t i = 1; i <= p; ++i) {
    if (unbordered_[i - 1]) out += powers_(m - p - i);
  }
  // Shortest border longer than u: it is an unbordered extension of u.
  for (std::size_t i = p + 1; i <= half; ++i) {
    term_ = powers_(i - p) - table_[i];
    term_ *= powers_(m - 2 * i);
    out += term_;
  }
}

BigCount count_bordered_with_prefix(const Word& prefix, std::size_t n) {
  if (prefix.size() > n) {
    throw DomainError(ErrorKind::InvalidLength,
                      "prefix length " + std::to_string(prefix.size()) + " exceeds n = " +
                          std::to_string(n));
  }
  BorderedPrefixCounter counter(n, prefix.alphabet_size());
  return counter.count(prefix.symbols());
}

BigCount count_bordered(std::size_t n, unsigned k) {
  BorderedPrefixCounter counter(n, k);
  BigCount total = 0;
  for (Symbol c = 1; c <= k; ++c) {
    const Symbol first[] = {c};
    total += counter.count(first);
  }
  return total;
}

BigCount count_unbordered(std::size_t n, unsigned k) {
  require_alphabet(k);
  require_length(n);
  BigCount all;
  mpz_ui_pow_ui(all.get_mpz_t(), k, n);
  return all - count_bordered(n, k);
}

}  // namespace bwords
