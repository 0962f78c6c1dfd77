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

#ifndef KPEVAL_EXTRACTORS_HPP_
#define KPEVAL_EXTRACTORS_HPP_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kpeval/corpus.hpp"
#include "kpeval/keyphrase.hpp"

namespace kpeval {

struct CandidatePhrase {
  std::vector<std::string> tokens;  // lowercased surface form
  std::vector<std::string> stems;   // per-token Porter stems
  std::vector<int> occurrences;     // first-token offsets, ascending
  double score = 0.0;

  std::string surface() const;
  std::string stem_key() const;
  int first_occurrence() const { return occurrences.front(); }
};

// Per-term statistics feeding the statistical scorer. Terms are stems;
// casing is counted on the original cased text.
struct TermStats {
  std::string term;
  int frequency = 0;
  int first_position = 0;
  int casing_count = 0;
  double left_right_dispersion = 0.0;  // mean of left/right context ratios
  double sentence_spread = 0.0;        // fraction of sentences with the term
};

enum class TopicSelection { kFirstOccurrence, kFrequency, kCentroid };
enum class Method { kYake, kTopicRank };

struct ExtractorConfig {
  int max_phrase_len = 3;
  int cooccurrence_window = 1;
  double clustering_threshold = 0.25;
  double damping = 0.85;
  double pagerank_tolerance = 1e-6;
  int pagerank_max_iters = 100;
  int n_keyphrases = 7;
  TopicSelection topic_selection = TopicSelection::kFirstOccurrence;
};

struct TopicCluster {
  std::vector<CandidatePhrase> members;
  double rank_score = 0.0;
};

// Maximal runs of non-stopword, non-punctuation tokens (runs also break at
// sentence ends, since terminators are punctuation tokens), expanded into
// every contiguous sub-span of length <= max_phrase_len. Identical surface
// candidates are merged with all their occurrences. Ordered by first
// occurrence, then span length, then surface.
std::vector<CandidatePhrase> extract_candidates(
    const std::vector<std::string>& doc_tokens, const ExtractorConfig& config,
    const std::unordered_set<std::string>& stopwords);

// Term stem -> statistics over the cased document text.
std::unordered_map<std::string, TermStats> yake_term_stats(
    std::string_view cased_text, const ExtractorConfig& config,
    const std::unordered_set<std::string>& stopwords);

// Term stem -> aggregate score (lower = more important).
std::unordered_map<std::string, double> yake_term_scores(
    std::string_view cased_text, const ExtractorConfig& config,
    const std::unordered_set<std::string>& stopwords);

// Statistical extractor: scores candidates from per-term casing, position,
// frequency, dispersion and sentence-spread features, lower = better, and
// returns the best n after stem-level dedup. The cased text drives casing
// features; it must tokenize consistently with the token inputs.
KeyphraseList yake_extract(const std::vector<std::string>& title_tokens,
                           const std::vector<std::string>& abstract_tokens,
                           std::string_view original_cased_text,
                           const ExtractorConfig& config,
                           const std::unordered_set<std::string>& stopwords);

// Hierarchical agglomerative clustering, average linkage over Jaccard
// similarity of stem sets. Merging stops when no cluster pair reaches
// clustering_threshold. The result partitions the input.
std::vector<TopicCluster> cluster_topics(
    const std::vector<CandidatePhrase>& candidates,
    const ExtractorConfig& config);

// Clusters, then scores topics with the damped stationary-distribution
// ranking over the complete topic graph. Returned clusters carry rank_score
// (non-negative, summing to 1) and are ordered best-first, ties broken by
// earliest member occurrence then smallest member surface.
std::vector<TopicCluster> rank_topics(
    const std::vector<CandidatePhrase>& candidates,
    const ExtractorConfig& config);

// Graph ranker: clusters candidates into topics, ranks topics by a damped
// stationary distribution over the complete topic graph (edge weight sums
// reciprocal offset distances), and emits one member per top topic.
KeyphraseList topicrank_extract(const std::vector<std::string>& title_tokens,
                                const std::vector<std::string>& abstract_tokens,
                                const ExtractorConfig& config,
                                const std::unordered_set<std::string>& stopwords);

// Runs either extractor on a processed record.
KeyphraseList extract_for_record(Method method, const PaperRecord& record,
                                 const ExtractorConfig& config,
                                 const std::unordered_set<std::string>& stopwords);

struct TuneResult {
  ExtractorConfig best;
  std::size_t best_index = 0;
  std::vector<double> scores;  // macro F1@k per grid point, grid order
};

// Evaluates every grid point on the validation set and returns the one with
// the highest macro F1@k; ties go to the earlier grid point. Throws on an
// empty grid or empty validation set.
TuneResult tune(Method method, const std::vector<PaperRecord>& validation,
                const std::vector<ExtractorConfig>& grid, int k,
                const std::unordered_set<std::string>& stopwords);

// Default grid: max_phrase_len {1,2,3} x cooccurrence_window {1,2} x
// clustering_threshold {0.25, 0.5}, nested in that order.
std::vector<ExtractorConfig> default_tuning_grid(int n_keyphrases);

const char* method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);
const char* topic_selection_name(TopicSelection selection);
std::optional<TopicSelection> topic_selection_from_name(std::string_view name);

}  // namespace kpeval

#endif  // KPEVAL_EXTRACTORS_HPP_
