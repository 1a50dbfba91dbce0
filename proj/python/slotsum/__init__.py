# Copyright 2026 The SlotSum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Template-based entity summarization with slot correction."""

from ._slotsum import (
    BackendError,
    DataError,
    Error,
    InvalidArgument,
    apply_strategy,
    augment_input,
    best_matching_span,
    build_golden_template,
    corpus_stats,
    correct_slots,
    format_popularity,
    indel_distance,
    jaccard_bow,
    match_entries,
    parse_kv,
    render,
    rouge_l,
    rouge_n,
    serialize_keys,
    serialize_kv,
    slot_fact_accuracy,
    slot_keys,
    sorted_indel_sim,
    stats_table,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "BackendError",
    "DataError",
    "Error",
    "InvalidArgument",
    "apply_strategy",
    "augment_input",
    "best_matching_span",
    "build_golden_template",
    "corpus_stats",
    "correct_slots",
    "format_popularity",
    "indel_distance",
    "jaccard_bow",
    "match_entries",
    "parse_kv",
    "render",
    "rouge_l",
    "rouge_n",
    "serialize_keys",
    "serialize_kv",
    "slot_fact_accuracy",
    "slot_keys",
    "sorted_indel_sim",
    "stats_table",
    "summarize",
]
