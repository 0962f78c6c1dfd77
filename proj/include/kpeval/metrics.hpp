// Copyright 2026 The kpeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPEVAL_METRICS_HPP_
#define KPEVAL_METRICS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kpeval/keyphrase.hpp"

namespace kpeval {

struct MatchReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int matched = 0;
  int predicted_used = 0;
  int gold_count = 0;
  // Total credit awarded: equals matched for full-match scoring, a sum of
  // overlap coefficients for partial scoring.
  double credit = 0.0;
};

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Raw counts behind the ratios, kept so reports can pool across documents.
  int match_count = 0;
  int pred_count = 0;
  int gold_count = 0;
};

// Stemmed full-match F1 at cutoff k. Both sides are canonicalized and
// deduplicated first, so duplicate predictions cannot pad precision. The
// precision denominator is the number of predictions actually used,
// min(k, predictions); strict_k switches it to a fixed k.
MatchReport f1_at_k(const KeyphraseList& predicted, const KeyphraseList& gold,
                    int k, bool strict_k = false);

// Partial-credit variant: exact canonical matches pair up first at credit 1,
// then remaining predictions greedily take, in rank order, the unmatched
// gold phrase with the highest token-set overlap coefficient
// |A∩B| / min(|A|, |B|). Never scores below f1_at_k.
MatchReport overlap_partial_f1_at_k(const KeyphraseList& predicted,
                                    const KeyphraseList& gold, int k,
                                    bool strict_k = false);

// Unigram overlap with per-token clipping. Both inputs empty scores 1 by
// convention; exactly one empty scores 0.
RougeScore rouge1_f1(const std::vector<std::string>& pred_tokens,
                     const std::vector<std::string>& gold_tokens);

// Longest-common-subsequence overlap, same empty-input conventions.
RougeScore rougel_f1(const std::vector<std::string>& pred_tokens,
                     const std::vector<std::string>& gold_tokens);

// Token view of a keyphrase string for the overlap metrics: tokenized as-is
// (no stemming, no stopword removal) with the phrase separators dropped.
std::vector<std::string> rouge_tokens(std::string_view keyphrase_string);

struct DocumentScores {
  MatchReport f1_5;
  MatchReport f1_7;
  RougeScore rouge1;
  RougeScore rougel;
};

struct EvalReport {
  std::string method;
  double f1_at_5 = 0.0;
  double f1_at_7 = 0.0;
  double rouge1_f1 = 0.0;
  double rougel_f1 = 0.0;
  int64_t document_count = 0;
};

// Arithmetic mean of each per-document F1. Throws "no_documents" on an
// empty input.
EvalReport macro_aggregate(const std::vector<DocumentScores>& per_document,
                           std::string method);

// Pooled-count alternative: sums matched/used/gold (and overlap counts)
// across documents before forming precision and recall.
EvalReport micro_aggregate(const std::vector<DocumentScores>& per_document,
                           std::string method);

}  // namespace kpeval

#endif  // KPEVAL_METRICS_HPP_
