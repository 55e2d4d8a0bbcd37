# Copyright 2026 The bwords Authors
# SPDX-License-Identifier: Apache-2.0
"""Ranking, unranking, counting and sampling of bordered and unbordered words.

Words are lists of ints over the alphabet 1..k. Counts and ranks are
Python ints of arbitrary size.
"""

from ._bwords import (
    DomainError,
    WordClass,
    border_indicator,
    compute_lps,
    count_bordered,
    count_bordered_with_prefix,
    count_unbordered,
    is_bordered,
    oracle,
    parse_word,
    rank,
    rank_bordered,
    rank_unbordered,
    render_word,
    sample,
    unbordered_prefix_indicator,
    unrank,
)

__all__ = [
    "DomainError",
    "WordClass",
    "border_indicator",
    "compute_lps",
    "count_bordered",
    "count_bordered_with_prefix",
    "count_unbordered",
    "is_bordered",
    "oracle",
    "parse_word",
    "rank",
    "rank_bordered",
    "rank_unbordered",
    "render_word",
    "sample",
    "unbordered_prefix_indicator",
    "unrank",
]
