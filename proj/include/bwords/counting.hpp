// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bwords/big_count.hpp"
#include "bwords/word.hpp"

namespace bwords {

/// Number of length-n bordered words over {1..k} that start with `prefix`.
/// Throws DomainError(InvalidLength) when |prefix| > n.
BigCount count_bordered_with_prefix(const Word& prefix, std::size_t n);

/// Number of length-n bordered words over {1..k}.
BigCount count_bordered(std::size_t n, unsigned k);

/// k^n - count_bordered(n, k).
BigCount count_unbordered(std::size_t n, unsigned k);

/// Evaluates B_k(u, n) for many prefixes u at a fixed (n, k).
///
/// Let p = |u|, a the unbordered prefix indicator of u, b its border
/// indicator. Splitting bordered words by the length i of their shortest
/// border (which is unbordered and at most n/2):
///
///   n <= 2p:  B(u,n) = sum_{i=1}^{n-p} a[i] k^{n-p-i}
///                    + sum_{i=n-p+1}^{n/2} a[i] b[i-(n-p)]
///   n >  2p:  B(u,n) = sum_{i=1}^{p} a[i] k^{n-p-i}
///                    + sum_{i=p+1}^{n/2} (k^{i-p} - B(u,i)) k^{n-2i}
///
/// The second case is filled bottom-up over m = p+1 .. n/2, O(n^2) big-int
/// operations per evaluation. The powers of k, the indicator arrays and the
/// DP row are owned by the counter and reused across calls; nothing is
/// cached between calls.
///
/// Not thread-safe; use one counter per thread.
class BorderedPrefixCounter {
 public:
  BorderedPrefixCounter(std::size_t n, unsigned k);

  std::size_t length() const noexcept { return n_; }
  unsigned alphabet_size() const noexcept { return k_; }
  const PowerTable& powers() const noexcept { return powers_; }

  /// `prefix` must be non-empty, at most n long, with symbols in 1..k.
  /// Symbols are not re-validated here.
  const BigCount& count(std::span<const Symbol> prefix);

 private:
  // B(u, m) for the prefix whose indicators are loaded, m >= p.
  void evaluate(std::size_t m, BigCount& out);

  std::size_t n_;
  unsigned k_;
  PowerTable powers_;

  std::size_t p_ = 0;
  std::vector<std::size_t> lps_;
  std::vector<std::uint8_t> unbordered_;  // a[1..p]
  std::vector<std::uint8_t> border_;      // b[1..p]
  std::vector<BigCount> table_;           // table_[m] = B(u, m), p < m <= n/2
  BigCount term_;
  BigCount result_;
};

}  // namespace bwords
