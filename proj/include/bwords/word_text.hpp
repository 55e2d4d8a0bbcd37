// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "bwords/word.hpp"

namespace bwords {

// Text form of a word: a digit string ("212") when k <= 9, otherwise
// comma-separated decimal symbols ("2,1,12").

/// Throws ParseError on malformed text or symbols outside 1..k.
Word parse_word(std::string_view text, unsigned k);

std::string render_word(const Word& w);

}  // namespace bwords
