// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bwords/big_count.hpp"
#include "bwords/word.hpp"

namespace bwords {

/// Number of length-n words of the class over {1..k}.
BigCount count_class(std::size_t n, unsigned k, WordClass kind);

/// The word at 1-based position `rank` of the lexicographic listing of the
/// class. Throws DomainError(RankOutOfRange) unless 1 <= rank <= count.
///
/// Each position is fixed by a binary search over 1..k for the largest
/// symbol x with rank(w_1 ... w_{i-1} x 1^{n-i}) <= rank.
Word unrank(const BigCount& rank, std::size_t n, unsigned k, WordClass kind);

/// Uniform sampler over one class at fixed (n, k).
///
/// Draws ranks from a std::mt19937_64 seeded with `seed`. A draw takes
/// ceil(b / 64) outputs of the engine, most significant limb first, keeps
/// the low b bits where b is the bit width of count - 1, and rejects values
/// >= count. The accepted value plus one is unranked. Sequences are
/// therefore identical across platforms for the same seed.
class UniformSampler {
 public:
  /// Throws DomainError(EmptyClass) when the class has no words.
  UniformSampler(std::size_t n, unsigned k, WordClass kind, std::uint64_t seed);

  const BigCount& class_size() const noexcept { return count_; }

  BigCount next_rank();
  Word next();

 private:
  std::size_t n_;
  unsigned k_;
  WordClass kind_;
  BigCount count_;
  std::size_t bits_;
  std::mt19937_64 engine_;
};

/// One draw from a freshly seeded UniformSampler.
Word sample_uniform(std::size_t n, unsigned k, WordClass kind, std::uint64_t seed);

}  // namespace bwords
