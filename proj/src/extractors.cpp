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

#include "kpeval/extractors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kpeval/metrics.hpp"
#include "kpeval/porter.hpp"
#include "kpeval/tokenizer.hpp"

namespace kpeval {
namespace {

std::string join_with_space(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& part : parts) {
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

bool is_sentence_terminator(const std::string& token) {
  return token == "." || token == "!" || token == "?" || token == "…";
}

// Title and abstract form one document; a period is inserted between them
// when the title does not end a sentence itself, so candidate runs and
// sentence features never straddle the boundary.
std::vector<std::string> build_document(
    const std::vector<std::string>& title_tokens,
    const std::vector<std::string>& abstract_tokens) {
  std::vector<std::string> doc = title_tokens;
  if (!title_tokens.empty() && !abstract_tokens.empty() &&
      !is_sentence_terminator(title_tokens.back())) {
    doc.push_back(".");
  }
  doc.insert(doc.end(), abstract_tokens.begin(), abstract_tokens.end());
  return doc;
}

bool is_stopword(const std::string& lower_token,
                 const std::unordered_set<std::string>& stopwords) {
  return stopwords.count(lower_token) > 0;
}

struct OccurrenceKey {
  int first_occurrence;
  std::size_t length;
  std::string surface;
};

bool candidate_order(const CandidatePhrase& a, const CandidatePhrase& b) {
  if (a.first_occurrence() != b.first_occurrence()) {
    return a.first_occurrence() < b.first_occurrence();
  }
  if (a.tokens.size() != b.tokens.size()) return a.tokens.size() < b.tokens.size();
  return a.surface() < b.surface();
}

}  // namespace

std::string CandidatePhrase::surface() const { return join_with_space(tokens); }

std::string CandidatePhrase::stem_key() const { return join_with_space(stems); }

std::vector<CandidatePhrase> extract_candidates(
    const std::vector<std::string>& doc_tokens, const ExtractorConfig& config,
    const std::unordered_set<std::string>& stopwords) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t run_start = 0;
  bool in_run = false;
  for (std::size_t i = 0; i <= doc_tokens.size(); ++i) {
    bool keep = i < doc_tokens.size() && !is_punctuation_token(doc_tokens[i]) &&
                !is_stopword(ascii_lower(doc_tokens[i]), stopwords);
    if (keep && !in_run) {
      run_start = i;
      in_run = true;
    } else if (!keep && in_run) {
      runs.emplace_back(run_start, i);
      in_run = false;
    }
  }

  std::map<std::string, CandidatePhrase> by_surface;
  for (const auto& [begin, end] : runs) {
    std::size_t run_len = end - begin;
    std::size_t max_len =
        std::min<std::size_t>(run_len, static_cast<std::size_t>(config.max_phrase_len));
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (std::size_t start = begin; start + len <= end; ++start) {
        std::vector<std::string> tokens;
        tokens.reserve(len);
        for (std::size_t i = start; i < start + len; ++i) {
          tokens.push_back(ascii_lower(doc_tokens[i]));
        }
        std::string surface = join_with_space(tokens);
        auto it = by_surface.find(surface);
        if (it == by_surface.end()) {
          CandidatePhrase candidate;
          candidate.tokens = std::move(tokens);
          candidate.stems.reserve(len);
          for (const std::string& token : candidate.tokens) {
            candidate.stems.push_back(porter_stem(token));
          }
          candidate.occurrences.push_back(static_cast<int>(start));
          by_surface.emplace(std::move(surface), std::move(candidate));
        } else {
          it->second.occurrences.push_back(static_cast<int>(start));
        }
      }
    }
  }

  std::vector<CandidatePhrase> candidates;
  candidates.reserve(by_surface.size());
  for (auto& [surface, candidate] : by_surface) {
    std::sort(candidate.occurrences.begin(), candidate.occurrences.end());
    candidates.push_back(std::move(candidate));
  }
  std::sort(candidates.begin(), candidates.end(), candidate_order);
  return candidates;
}

namespace {

bool starts_uppercase(const std::string& token) {
  return !token.empty() && token[0] >= 'A' && token[0] <= 'Z';
}

bool is_acronym(const std::string& token) {
  if (token.size() <= 1) return false;
  bool has_letter = false;
  for (char c : token) {
    if (c >= 'a' && c <= 'z') return false;
    if (c >= 'A' && c <= 'Z') has_letter = true;
  }
  return has_letter;
}

struct TermAccumulator {
  int frequency = 0;
  int first_position = -1;
  int uppercase_count = 0;  // uppercase-initial, not sentence-initial
  int acronym_count = 0;
  std::vector<int> sentence_ids;  // ascending, with multiplicity
  std::unordered_set<int> distinct_sentences;
  std::unordered_set<std::string> left_distinct, right_distinct;
  int left_total = 0, right_total = 0;
  bool only_stopword_surfaces = true;
};

struct YakeModel {
  std::unordered_map<std::string, TermStats> stats;
  std::unordered_map<std::string, double> scores;
};

double median_of_sorted(const std::vector<int>& values) {
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// Single-pass feature accumulation in the style of the statistical scorer
// this models: casing, sentence position, frequency normalized by the corpus
// of terms in the document, context dispersion, sentence spread.
YakeModel build_yake_model(const std::vector<std::string>& cased_tokens,
                           const ExtractorConfig& config,
                           const std::unordered_set<std::string>& stopwords) {
  auto sentences = sentence_ranges(cased_tokens);
  std::unordered_map<std::string, TermAccumulator> terms;

  for (std::size_t s = 0; s < sentences.size(); ++s) {
    std::vector<std::string> window;  // stems of the last few words
    bool seen_word = false;
    for (std::size_t i = sentences[s].first; i < sentences[s].second; ++i) {
      const std::string& cased = cased_tokens[i];
      if (is_punctuation_token(cased)) continue;
      std::string lower = ascii_lower(cased);
      std::string stem = porter_stem(lower);

      TermAccumulator& acc = terms[stem];
      ++acc.frequency;
      if (acc.first_position < 0) acc.first_position = static_cast<int>(i);
      if (starts_uppercase(cased) && seen_word) ++acc.uppercase_count;
      if (is_acronym(cased)) ++acc.acronym_count;
      acc.sentence_ids.push_back(static_cast<int>(s));
      acc.distinct_sentences.insert(static_cast<int>(s));
      if (!is_stopword(lower, stopwords)) acc.only_stopword_surfaces = false;

      for (const std::string& left : window) {
        acc.left_distinct.insert(left);
        ++acc.left_total;
        TermAccumulator& other = terms[left];
        other.right_distinct.insert(stem);
        ++other.right_total;
      }
      window.push_back(stem);
      if (window.size() > static_cast<std::size_t>(config.cooccurrence_window)) {
        window.erase(window.begin());
      }
      seen_word = true;
    }
  }

  YakeModel model;
  if (terms.empty()) return model;

  double mean = 0.0;
  std::size_t content_terms = 0;
  int max_tf = 0;
  for (const auto& [stem, acc] : terms) {
    max_tf = std::max(max_tf, acc.frequency);
    if (!acc.only_stopword_surfaces) {
      mean += acc.frequency;
      ++content_terms;
    }
  }
  if (content_terms == 0) return model;
  mean /= static_cast<double>(content_terms);
  double variance = 0.0;
  for (const auto& [stem, acc] : terms) {
    if (!acc.only_stopword_surfaces) {
      variance += (acc.frequency - mean) * (acc.frequency - mean);
    }
  }
  double stddev = std::sqrt(variance / static_cast<double>(content_terms));

  double sentence_count = static_cast<double>(sentences.size());
  for (const auto& [stem, acc] : terms) {
    TermStats stats;
    stats.term = stem;
    stats.frequency = acc.frequency;
    stats.first_position = acc.first_position;
    stats.casing_count = std::max(acc.uppercase_count, acc.acronym_count);
    double wl = acc.left_total > 0 ? static_cast<double>(acc.left_distinct.size()) /
                                         acc.left_total
                                   : 0.0;
    double wr = acc.right_total > 0
                    ? static_cast<double>(acc.right_distinct.size()) / acc.right_total
                    : 0.0;
    stats.left_right_dispersion = (wl + wr) / 2.0;
    stats.sentence_spread =
        static_cast<double>(acc.distinct_sentences.size()) / sentence_count;

    double tf = acc.frequency;
    double casing = stats.casing_count / (1.0 + std::log(tf));
    double position = std::log(std::log(3.0 + median_of_sorted(acc.sentence_ids)));
    double frequency = tf / (mean + stddev);
    double relatedness = 1.0 + (wl + wr) * tf / static_cast<double>(max_tf);
    double spread = stats.sentence_spread;
    double score = relatedness * position /
                   (casing + frequency / relatedness + spread / relatedness);

    model.stats.emplace(stem, std::move(stats));
    model.scores.emplace(stem, score);
  }
  return model;
}

// Maps document tokens to their cased counterparts. Inputs that tokenize
// identically align one to one; otherwise unmatched positions fall back to
// the lowercased token, losing only casing information.
std::vector<std::string> align_cased_tokens(
    const std::vector<std::string>& doc_tokens, std::string_view cased_text) {
  std::vector<std::string> cased = tokenize(cased_text);
  std::vector<std::string> aligned;
  aligned.reserve(doc_tokens.size());
  std::size_t p = 0;
  for (const std::string& token : doc_tokens) {
    if (p < cased.size() && ascii_lower(cased[p]) == token) {
      aligned.push_back(cased[p]);
      ++p;
    } else {
      aligned.push_back(token);
    }
  }
  return aligned;
}

struct RankedPhrase {
  double score;
  int first_occurrence;
  std::string surface;
  std::string stem_key;
};

KeyphraseList dedup_and_truncate(std::vector<RankedPhrase>& ranked, int n) {
  KeyphraseList out;
  std::unordered_set<std::string> seen_stems;
  for (const RankedPhrase& phrase : ranked) {
    if (static_cast<int>(out.size()) >= n) break;
    if (seen_stems.insert(phrase.stem_key).second) out.push_back(phrase.surface);
  }
  return out;
}

}  // namespace

std::unordered_map<std::string, TermStats> yake_term_stats(
    std::string_view cased_text, const ExtractorConfig& config,
    const std::unordered_set<std::string>& stopwords) {
  return build_yake_model(tokenize(cased_text), config, stopwords).stats;
}

std::unordered_map<std::string, double> yake_term_scores(
    std::string_view cased_text, const ExtractorConfig& config,
    const std::unordered_set<std::string>& stopwords) {
  return build_yake_model(tokenize(cased_text), config, stopwords).scores;
}

KeyphraseList yake_extract(const std::vector<std::string>& title_tokens,
                           const std::vector<std::string>& abstract_tokens,
                           std::string_view original_cased_text,
                           const ExtractorConfig& config,
                           const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> doc = build_document(title_tokens, abstract_tokens);
  std::vector<CandidatePhrase> candidates =
      extract_candidates(doc, config, stopwords);
  if (candidates.empty()) return {};

  std::vector<std::string> cased = align_cased_tokens(doc, original_cased_text);
  YakeModel model = build_yake_model(cased, config, stopwords);

  std::vector<RankedPhrase> ranked;
  ranked.reserve(candidates.size());
  for (const CandidatePhrase& candidate : candidates) {
    double product = 1.0;
    double sum = 0.0;
    for (const std::string& stem : candidate.stems) {
      auto it = model.scores.find(stem);
      double w = it != model.scores.end() ? it->second : 1.0;
      product *= w;
      sum += w;
    }
    double tf = static_cast<double>(candidate.occurrences.size());
    double score = product / (tf * (1.0 + sum));
    ranked.push_back({score, candidate.first_occurrence(), candidate.surface(),
                      candidate.stem_key()});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedPhrase& a,
                                             const RankedPhrase& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.first_occurrence != b.first_occurrence) {
      return a.first_occurrence < b.first_occurrence;
    }
    return a.surface < b.surface;
  });
  return dedup_and_truncate(ranked, config.n_keyphrases);
}

namespace {

double jaccard(const std::unordered_set<std::string>& a,
               const std::unordered_set<std::string>& b) {
  std::size_t shared = 0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const std::string& item : small) {
    if (large.count(item) > 0) ++shared;
  }
  std::size_t unioned = a.size() + b.size() - shared;
  if (unioned == 0) return 0.0;
  return static_cast<double>(shared) / static_cast<double>(unioned);
}

}  // namespace

std::vector<TopicCluster> cluster_topics(
    const std::vector<CandidatePhrase>& candidates,
    const ExtractorConfig& config) {
  std::size_t n = candidates.size();
  if (n == 0) return {};

  std::vector<std::unordered_set<std::string>> stem_sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    stem_sets[i].insert(candidates[i].stems.begin(), candidates[i].stems.end());
  }

  // Average linkage via the Lance-Williams update: merging clusters only
  // averages their rows, so the full matrix never needs recomputing.
  std::vector<double> sim(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = jaccard(stem_sets[i], stem_sets[j]);
      sim[i * n + j] = s;
      sim[j * n + i] = s;
    }
  }

  std::vector<bool> active(n, true);
  std::vector<std::size_t> cluster_size(n, 1);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  while (true) {
    double best = -1.0;
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (sim[i * n + j] > best) {
          best = sim[i * n + j];
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best < config.clustering_threshold) break;

    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == best_i || k == best_j) continue;
      double merged = (cluster_size[best_i] * sim[best_i * n + k] +
                       cluster_size[best_j] * sim[best_j * n + k]) /
                      static_cast<double>(cluster_size[best_i] + cluster_size[best_j]);
      sim[best_i * n + k] = merged;
      sim[k * n + best_i] = merged;
    }
    cluster_size[best_i] += cluster_size[best_j];
    members[best_i].insert(members[best_i].end(), members[best_j].begin(),
                           members[best_j].end());
    active[best_j] = false;
  }

  std::vector<TopicCluster> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    TopicCluster cluster;
    std::sort(members[i].begin(), members[i].end());
    for (std::size_t index : members[i]) cluster.members.push_back(candidates[index]);
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

namespace {

int cluster_first_occurrence(const TopicCluster& cluster) {
  int first = cluster.members.front().first_occurrence();
  for (const CandidatePhrase& member : cluster.members) {
    first = std::min(first, member.first_occurrence());
  }
  return first;
}

std::string cluster_min_surface(const TopicCluster& cluster) {
  std::string min_surface = cluster.members.front().surface();
  for (const CandidatePhrase& member : cluster.members) {
    min_surface = std::min(min_surface, member.surface());
  }
  return min_surface;
}

const CandidatePhrase& pick_member(const TopicCluster& cluster,
                                   TopicSelection selection) {
  const CandidatePhrase* best = &cluster.members.front();
  auto earlier = [](const CandidatePhrase& a, const CandidatePhrase& b) {
    if (a.first_occurrence() != b.first_occurrence()) {
      return a.first_occurrence() < b.first_occurrence();
    }
    return a.surface() < b.surface();
  };
  switch (selection) {
    case TopicSelection::kFirstOccurrence:
      for (const CandidatePhrase& member : cluster.members) {
        if (earlier(member, *best)) best = &member;
      }
      break;
    case TopicSelection::kFrequency:
      for (const CandidatePhrase& member : cluster.members) {
        if (member.occurrences.size() > best->occurrences.size() ||
            (member.occurrences.size() == best->occurrences.size() &&
             earlier(member, *best))) {
          best = &member;
        }
      }
      break;
    case TopicSelection::kCentroid: {
      double best_similarity = -1.0;
      for (const CandidatePhrase& member : cluster.members) {
        std::unordered_set<std::string> member_stems(member.stems.begin(),
                                                     member.stems.end());
        double total = 0.0;
        for (const CandidatePhrase& other : cluster.members) {
          if (&other == &member) continue;
          std::unordered_set<std::string> other_stems(other.stems.begin(),
                                                      other.stems.end());
          total += jaccard(member_stems, other_stems);
        }
        double average = cluster.members.size() > 1
                             ? total / static_cast<double>(cluster.members.size() - 1)
                             : 0.0;
        if (average > best_similarity ||
            (average == best_similarity && earlier(member, *best))) {
          best_similarity = average;
          best = &member;
        }
      }
      break;
    }
  }
  return *best;
}

std::vector<double> pagerank(const std::vector<std::vector<double>>& weights,
                             const ExtractorConfig& config) {
  std::size_t n = weights.size();
  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  if (n == 1) return rank;

  std::vector<double> strength(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) strength[i] += weights[i][j];
  }

  std::vector<double> next(n, 0.0);
  for (int iter = 0; iter < config.pagerank_max_iters; ++iter) {
    double base = (1.0 - config.damping) / static_cast<double>(n);
    std::fill(next.begin(), next.end(), base);
    for (std::size_t j = 0; j < n; ++j) {
      if (strength[j] <= 0.0) {
        double share = config.damping * rank[j] / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) next[i] += share;
        continue;
      }
      double scaled = config.damping * rank[j] / strength[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (weights[j][i] > 0.0) next[i] += scaled * weights[j][i];
      }
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (delta < config.pagerank_tolerance) break;
  }

  double total = 0.0;
  for (double value : rank) total += value;
  if (total > 0.0) {
    for (double& value : rank) value /= total;
  }
  return rank;
}

}  // namespace

std::vector<TopicCluster> rank_topics(
    const std::vector<CandidatePhrase>& candidates,
    const ExtractorConfig& config) {
  std::vector<TopicCluster> clusters = cluster_topics(candidates, config);
  std::size_t n = clusters.size();
  if (n == 0) return clusters;

  std::vector<std::vector<double>> weights(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double weight = 0.0;
      for (const CandidatePhrase& ca : clusters[a].members) {
        for (const CandidatePhrase& cb : clusters[b].members) {
          for (int oa : ca.occurrences) {
            for (int ob : cb.occurrences) {
              int distance = std::max(1, std::abs(oa - ob));
              weight += 1.0 / static_cast<double>(distance);
            }
          }
        }
      }
      weights[a][b] = weight;
      weights[b][a] = weight;
    }
  }

  std::vector<double> ranks = pagerank(weights, config);
  for (std::size_t i = 0; i < n; ++i) clusters[i].rank_score = ranks[i];

  std::sort(clusters.begin(), clusters.end(),
            [](const TopicCluster& a, const TopicCluster& b) {
              if (a.rank_score != b.rank_score) {
                return a.rank_score > b.rank_score;
              }
              int fa = cluster_first_occurrence(a);
              int fb = cluster_first_occurrence(b);
              if (fa != fb) return fa < fb;
              return cluster_min_surface(a) < cluster_min_surface(b);
            });
  return clusters;
}

KeyphraseList topicrank_extract(const std::vector<std::string>& title_tokens,
                                const std::vector<std::string>& abstract_tokens,
                                const ExtractorConfig& config,
                                const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> doc = build_document(title_tokens, abstract_tokens);
  std::vector<CandidatePhrase> candidates =
      extract_candidates(doc, config, stopwords);
  if (candidates.empty()) return {};

  std::vector<TopicCluster> clusters = rank_topics(candidates, config);

  std::vector<RankedPhrase> ranked;
  std::size_t take = std::min<std::size_t>(
      clusters.size(), static_cast<std::size_t>(config.n_keyphrases));
  for (std::size_t i = 0; i < take; ++i) {
    const CandidatePhrase& member =
        pick_member(clusters[i], config.topic_selection);
    ranked.push_back({0.0, member.first_occurrence(), member.surface(),
                      member.stem_key()});
  }
  return dedup_and_truncate(ranked, config.n_keyphrases);
}

KeyphraseList extract_for_record(Method method, const PaperRecord& record,
                                 const ExtractorConfig& config,
                                 const std::unordered_set<std::string>& stopwords) {
  if (method == Method::kTopicRank) {
    return topicrank_extract(record.title_tokens, record.abstract_tokens, config,
                             stopwords);
  }
  std::vector<std::string> doc =
      build_document(record.title_tokens, record.abstract_tokens);
  return yake_extract(record.title_tokens, record.abstract_tokens,
                      join_with_space(doc), config, stopwords);
}

TuneResult tune(Method method, const std::vector<PaperRecord>& validation,
                const std::vector<ExtractorConfig>& grid, int k,
                const std::unordered_set<std::string>& stopwords) {
  if (grid.empty()) throw std::runtime_error("empty tuning grid");
  if (validation.empty()) throw std::runtime_error("empty validation set");

  TuneResult result;
  result.scores.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    ExtractorConfig config = grid[g];
    config.n_keyphrases = k;
    double sum = 0.0;
    std::size_t scored = 0;
    for (const PaperRecord& record : validation) {
      KeyphraseList gold = parse_keyphrases(record.keyphrase_string);
      if (normalize_keyphrases(gold).empty()) continue;
      KeyphraseList predicted = extract_for_record(method, record, config, stopwords);
      sum += f1_at_k(predicted, gold, k).f1;
      ++scored;
    }
    if (scored == 0) throw std::runtime_error("empty validation set");
    result.scores.push_back(sum / static_cast<double>(scored));
  }

  result.best_index = 0;
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (result.scores[g] > result.scores[result.best_index]) result.best_index = g;
  }
  result.best = grid[result.best_index];
  result.best.n_keyphrases = k;  // what the winning score was measured at
  return result;
}

std::vector<ExtractorConfig> default_tuning_grid(int n_keyphrases) {
  std::vector<ExtractorConfig> grid;
  for (int length : {1, 2, 3}) {
    for (int window : {1, 2}) {
      for (double threshold : {0.25, 0.5}) {
        ExtractorConfig config;
        config.max_phrase_len = length;
        config.cooccurrence_window = window;
        config.clustering_threshold = threshold;
        config.n_keyphrases = n_keyphrases;
        grid.push_back(config);
      }
    }
  }
  return grid;
}

const char* method_name(Method method) {
  return method == Method::kYake ? "yake" : "topicrank";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "yake") return Method::kYake;
  if (name == "topicrank") return Method::kTopicRank;
  return std::nullopt;
}

const char* topic_selection_name(TopicSelection selection) {
  switch (selection) {
    case TopicSelection::kFirstOccurrence: return "first_occurrence";
    case TopicSelection::kFrequency: return "frequency";
    case TopicSelection::kCentroid: return "centroid";
  }
  return "first_occurrence";
}

std::optional<TopicSelection> topic_selection_from_name(std::string_view name) {
  if (name == "first_occurrence") return TopicSelection::kFirstOccurrence;
  if (name == "frequency") return TopicSelection::kFrequency;
  if (name == "centroid") return TopicSelection::kCentroid;
  return std::nullopt;
}

}  // namespace kpeval
