// Copyright 2026 The bwords Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bwords/big_count.hpp"
#include "bwords/border.hpp"
#include "bwords/counting.hpp"
#include "bwords/errors.hpp"
#include "bwords/oracle.hpp"
#include "bwords/ranking.hpp"
#include "bwords/unranking.hpp"
#include "bwords/word.hpp"
#include "bwords/word_text.hpp"
