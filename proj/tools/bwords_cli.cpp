// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

// bwords: rank, unrank, count, sample and analyze bordered / unbordered words.
//
// Exit status: 0 on success, 1 on usage or parse errors, 2 on domain errors.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "bwords/bwords.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Options {
  bool oracle = false;
  bwords::WordClass kind = bwords::WordClass::Bordered;
  unsigned k = 0;
  std::size_t n = 0;
  std::string word;
  std::string rank;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

void add_kind(CLI::App* cmd, Options& opts) {
  cmd->add_option_function<std::string>(
         "--kind",
         [&opts](const std::string& value) {
           opts.kind = value == "bordered" ? bwords::WordClass::Bordered
                                           : bwords::WordClass::Unbordered;
         },
         "bordered | unbordered")
      ->required()
      ->check(CLI::IsMember({"bordered", "unbordered"}));
}

void add_alphabet(CLI::App* cmd, Options& opts) {
  cmd->add_option("-k", opts.k, "alphabet size")->required();
}

void add_length(CLI::App* cmd, Options& opts) {
  cmd->add_option("-n", opts.n, "word length")->required();
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(static_cast<unsigned long long>(values[i]));
  }
  return out;
}

void run_rank(const Options& opts) {
  const bwords::Word w = bwords::parse_word(opts.word, opts.k);
  const bwords::Rank r =
      opts.oracle ? bwords::oracle::rank_naive(w, opts.kind) : bwords::rank(w, opts.kind);
  std::cout << bwords::to_decimal(r.value) << '\n';
}

void run_unrank(const Options& opts) {
  const bwords::BigCount r = bwords::parse_decimal(opts.rank);
  if (!opts.oracle) {
    std::cout << bwords::render_word(bwords::unrank(r, opts.n, opts.k, opts.kind)) << '\n';
    return;
  }
  const auto listing = bwords::oracle::enumerate_class(opts.n, opts.k, opts.kind);
  if (r < 1 || r > listing.words.size()) {
    throw bwords::DomainError(bwords::ErrorKind::RankOutOfRange,
                              "rank " + opts.rank + " outside [1, " +
                                  std::to_string(listing.words.size()) + "]");
  }
  std::cout << bwords::render_word(listing.words[r.get_ui() - 1]) << '\n';
}

void run_count(const Options& opts) {
  if (opts.oracle) {
    std::cout << bwords::oracle::enumerate_class(opts.n, opts.k, opts.kind).words.size() << '\n';
    return;
  }
  std::cout << bwords::to_decimal(bwords::count_class(opts.n, opts.k, opts.kind)) << '\n';
}

void run_sample(const Options& opts) {
  bwords::UniformSampler sampler(opts.n, opts.k, opts.kind, opts.seed);
  for (std::size_t i = 0; i < opts.count; ++i) {
    std::cout << bwords::render_word(sampler.next()) << '\n';
  }
}

void run_analyze(const Options& opts) {
  const bwords::Word w = bwords::parse_word(opts.word, opts.k);
  std::cout << join(bwords::compute_lps(w).lengths) << '\n'
            << join(bwords::unbordered_prefix_indicator(w).bits) << '\n'
            << join(bwords::border_indicator(w).bits) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, unrank, count and sample bordered and unbordered words"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_flag("--oracle", opts.oracle, "use the brute-force reference (small instances only)");

  auto* rank_cmd = app.add_subcommand("rank", "rank of WORD in its length-n listing");
  add_kind(rank_cmd, opts);
  add_alphabet(rank_cmd, opts);
  rank_cmd->add_option("WORD", opts.word, "digits for k <= 9, comma-separated otherwise")->required();

  auto* unrank_cmd = app.add_subcommand("unrank", "word at rank RANK");
  add_kind(unrank_cmd, opts);
  add_alphabet(unrank_cmd, opts);
  add_length(unrank_cmd, opts);
  unrank_cmd->add_option("-r", opts.rank, "1-based decimal rank")->required();

  auto* count_cmd = app.add_subcommand("count", "number of words in the class");
  add_kind(count_cmd, opts);
  add_alphabet(count_cmd, opts);
  add_length(count_cmd, opts);

  auto* sample_cmd = app.add_subcommand("sample", "uniformly random words of the class");
  add_kind(sample_cmd, opts);
  add_alphabet(sample_cmd, opts);
  add_length(sample_cmd, opts);
  sample_cmd->add_option("--seed", opts.seed, "mt19937_64 seed")->capture_default_str();
  sample_cmd->add_option("--count", opts.count, "number of words")->capture_default_str();

  auto* analyze_cmd =
      app.add_subcommand("analyze", "LPS array, unbordered prefix indicator, border indicator");
  add_alphabet(analyze_cmd, opts);
  analyze_cmd->add_option("WORD", opts.word)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rank_cmd) run_rank(opts);
    else if (*unrank_cmd) run_unrank(opts);
    else if (*count_cmd) run_count(opts);
    else if (*sample_cmd) run_sample(opts);
    else if (*analyze_cmd) run_analyze(opts);
  } catch (const bwords::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const bwords::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
