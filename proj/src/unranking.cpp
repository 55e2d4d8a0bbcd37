// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwords/unranking.hpp"

#include <vector>

#include "bwords/counting.hpp"
#include "bwords/errors.hpp"
#include "bwords/ranking.hpp"

namespace bwords {

BigCount count_class(std::size_t n, unsigned k, WordClass kind) {
  return kind == WordClass::Bordered ? count_bordered(n, k) : count_unbordered(n, k);
}

Word unrank(const BigCount& rank, std::size_t n, unsigned k, WordClass kind) {
  const BigCount total = count_class(n, k, kind);
  if (rank < 1 || rank > total) {
    throw DomainError(ErrorKind::RankOutOfRange,
                      "rank " + to_decimal(rank) + " outside [1, " + to_decimal(total) + "] for " +
                          std::string(to_string(kind)) + " words with n = " + std::to_string(n) +
                          ", k = " + std::to_string(k));
  }

  Ranker ranker(n, k);
  std::vector<Symbol> w(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    // Invariant: w_i = left is feasible, i.e. rank(w) <= rank.
    Symbol left = 1;
    Symbol right = k;
    while (left < right) {
      const Symbol mid = left + (right - left + 1) / 2;
      const Symbol save = w[i];
      w[i] = mid;
      if (ranker(w, kind) <= rank) {
        left = mid;
      } else {
        w[i] = save;
        right = mid - 1;
      }
    }
  }
  return Word(std::move(w), k);
}

UniformSampler::UniformSampler(std::size_t n, unsigned k, WordClass kind, std::uint64_t seed)
    : n_(n), k_(k), kind_(kind), count_(count_class(n, k, kind)), bits_(0), engine_(seed) {
  if (count_ == 0) {
    throw DomainError(ErrorKind::EmptyClass, "no " + std::string(to_string(kind)) +
                                                 " words with n = " + std::to_string(n) +
                                                 ", k = " + std::to_string(k));
  }
  const BigCount top = count_ - 1;
  bits_ = top == 0 ? 0 : mpz_sizeinbase(top.get_mpz_t(), 2);
}

BigCount UniformSampler::next_rank() {
  const std::size_t limbs = (bits_ + 63) / 64;
  BigCount draw;
  do {
    draw = 0;
    for (std::size_t l = 0; l < limbs; ++l) {
      const std::uint64_t chunk = engine_();
      BigCount limb;
      mpz_import(limb.get_mpz_t(), 1, 1, sizeof(chunk), 0, 0, &chunk);
      draw <<= 64;
      draw += limb;
    }
    mpz_fdiv_r_2exp(draw.get_mpz_t(), draw.get_mpz_t(), bits_);
  } while (draw >= count_);
  return draw + 1;
}

Word UniformSampler::next() { return unrank(next_rank(), n_, k_, kind_); }

Word sample_uniform(std::size_t n, unsigned k, WordClass kind, std::uint64_t seed) {
  UniformSampler sampler(n, k, kind, seed);
  return sampler.next();
}

}  // namespace bwords
