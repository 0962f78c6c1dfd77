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

#include "kpeval/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "kpeval/tokenizer.hpp"

namespace kpeval {
namespace {

double harmonic_f1(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<std::string> phrase_token_list(const std::string& phrase) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= phrase.size(); ++i) {
    if (i < phrase.size() && phrase[i] != ' ') continue;
    if (i > start) tokens.push_back(phrase.substr(start, i - start));
    start = i + 1;
  }
  return tokens;
}

double overlap_coefficient(const std::unordered_set<std::string>& a,
                           const std::unordered_set<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  std::size_t shared = 0;
  for (const std::string& item : small) {
    if (large.count(item) > 0) ++shared;
  }
  return static_cast<double>(shared) / static_cast<double>(small.size());
}

}  // namespace

MatchReport f1_at_k(const KeyphraseList& predicted, const KeyphraseList& gold,
                    int k, bool strict_k) {
  KeyphraseList pred_norm = normalize_keyphrases(predicted);
  KeyphraseList gold_norm = normalize_keyphrases(gold);

  MatchReport report;
  report.gold_count = static_cast<int>(gold_norm.size());
  report.predicted_used =
      std::min<int>(k, static_cast<int>(pred_norm.size()));

  std::unordered_set<std::string> gold_set(gold_norm.begin(), gold_norm.end());
  for (int i = 0; i < report.predicted_used; ++i) {
    if (gold_set.count(pred_norm[i]) > 0) ++report.matched;
  }

  report.credit = report.matched;
  int precision_denominator = strict_k ? k : report.predicted_used;
  if (precision_denominator > 0) {
    report.precision =
        static_cast<double>(report.matched) / precision_denominator;
  }
  if (report.gold_count > 0) {
    report.recall = static_cast<double>(report.matched) / report.gold_count;
  }
  report.f1 = harmonic_f1(report.precision, report.recall);
  return report;
}

MatchReport overlap_partial_f1_at_k(const KeyphraseList& predicted,
                                    const KeyphraseList& gold, int k,
                                    bool strict_k) {
  KeyphraseList pred_norm = normalize_keyphrases(predicted);
  KeyphraseList gold_norm = normalize_keyphrases(gold);

  MatchReport report;
  report.gold_count = static_cast<int>(gold_norm.size());
  report.predicted_used =
      std::min<int>(k, static_cast<int>(pred_norm.size()));

  std::vector<std::unordered_set<std::string>> gold_sets;
  gold_sets.reserve(gold_norm.size());
  for (const std::string& phrase : gold_norm) {
    auto tokens = phrase_token_list(phrase);
    gold_sets.emplace_back(tokens.begin(), tokens.end());
  }
  std::vector<bool> gold_taken(gold_norm.size(), false);

  // Exact canonical matches pair first; that keeps the partial score from
  // ever dropping below the full-match score when a greedy early grab would
  // otherwise steal another prediction's exact partner.
  std::vector<bool> pred_done(report.predicted_used, false);
  double credit_sum = 0.0;
  for (int i = 0; i < report.predicted_used; ++i) {
    for (std::size_t g = 0; g < gold_norm.size(); ++g) {
      if (!gold_taken[g] && gold_norm[g] == pred_norm[i]) {
        gold_taken[g] = true;
        pred_done[i] = true;
        credit_sum += 1.0;
        ++report.matched;
        break;
      }
    }
  }

  for (int i = 0; i < report.predicted_used; ++i) {
    if (pred_done[i]) continue;
    auto tokens = phrase_token_list(pred_norm[i]);
    std::unordered_set<std::string> pred_set(tokens.begin(), tokens.end());
    double best = 0.0;
    std::size_t best_gold = gold_norm.size();
    for (std::size_t g = 0; g < gold_norm.size(); ++g) {
      if (gold_taken[g]) continue;
      double coefficient = overlap_coefficient(pred_set, gold_sets[g]);
      if (coefficient > best) {
        best = coefficient;
        best_gold = g;
      }
    }
    if (best > 0.0) {
      gold_taken[best_gold] = true;
      credit_sum += best;
      ++report.matched;
    }
  }

  report.credit = credit_sum;
  int precision_denominator = strict_k ? k : report.predicted_used;
  if (precision_denominator > 0) report.precision = credit_sum / precision_denominator;
  if (report.gold_count > 0) report.recall = credit_sum / report.gold_count;
  report.f1 = harmonic_f1(report.precision, report.recall);
  return report;
}

RougeScore rouge1_f1(const std::vector<std::string>& pred_tokens,
                     const std::vector<std::string>& gold_tokens) {
  RougeScore score;
  score.pred_count = static_cast<int>(pred_tokens.size());
  score.gold_count = static_cast<int>(gold_tokens.size());
  if (pred_tokens.empty() && gold_tokens.empty()) {
    score.precision = score.recall = score.f1 = 1.0;
    return score;
  }
  if (pred_tokens.empty() || gold_tokens.empty()) return score;

  std::unordered_map<std::string, int> gold_counts;
  for (const std::string& token : gold_tokens) ++gold_counts[token];
  for (const std::string& token : pred_tokens) {
    auto it = gold_counts.find(token);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++score.match_count;
    }
  }
  score.precision = static_cast<double>(score.match_count) / score.pred_count;
  score.recall = static_cast<double>(score.match_count) / score.gold_count;
  score.f1 = harmonic_f1(score.precision, score.recall);
  return score;
}

RougeScore rougel_f1(const std::vector<std::string>& pred_tokens,
                     const std::vector<std::string>& gold_tokens) {
  RougeScore score;
  score.pred_count = static_cast<int>(pred_tokens.size());
  score.gold_count = static_cast<int>(gold_tokens.size());
  if (pred_tokens.empty() && gold_tokens.empty()) {
    score.precision = score.recall = score.f1 = 1.0;
    return score;
  }
  if (pred_tokens.empty() || gold_tokens.empty()) return score;

  std::size_t n = pred_tokens.size();
  std::size_t m = gold_tokens.size();
  std::vector<int> previous(m + 1, 0);
  std::vector<int> current(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (pred_tokens[i - 1] == gold_tokens[j - 1]) {
        current[j] = previous[j - 1] + 1;
      } else {
        current[j] = std::max(previous[j], current[j - 1]);
      }
    }
    std::swap(previous, current);
  }
  score.match_count = previous[m];
  score.precision = static_cast<double>(score.match_count) / score.pred_count;
  score.recall = static_cast<double>(score.match_count) / score.gold_count;
  score.f1 = harmonic_f1(score.precision, score.recall);
  return score;
}

std::vector<std::string> rouge_tokens(std::string_view keyphrase_string) {
  std::vector<std::string> out;
  for (std::string& token : tokenize(keyphrase_string)) {
    if (token == "," || token == ";") continue;
    out.push_back(std::move(token));
  }
  return out;
}

EvalReport macro_aggregate(const std::vector<DocumentScores>& per_document,
                           std::string method) {
  if (per_document.empty()) throw std::runtime_error("no_documents");
  EvalReport report;
  report.method = std::move(method);
  report.document_count = static_cast<int64_t>(per_document.size());
  for (const DocumentScores& doc : per_document) {
    report.f1_at_5 += doc.f1_5.f1;
    report.f1_at_7 += doc.f1_7.f1;
    report.rouge1_f1 += doc.rouge1.f1;
    report.rougel_f1 += doc.rougel.f1;
  }
  double n = static_cast<double>(report.document_count);
  report.f1_at_5 /= n;
  report.f1_at_7 /= n;
  report.rouge1_f1 /= n;
  report.rougel_f1 /= n;
  return report;
}

namespace {

double pooled_f1(double matched, double used, double gold) {
  double precision = used > 0 ? matched / used : 0.0;
  double recall = gold > 0 ? matched / gold : 0.0;
  return harmonic_f1(precision, recall);
}

}  // namespace

EvalReport micro_aggregate(const std::vector<DocumentScores>& per_document,
                           std::string method) {
  if (per_document.empty()) throw std::runtime_error("no_documents");
  EvalReport report;
  report.method = std::move(method);
  report.document_count = static_cast<int64_t>(per_document.size());

  double match5 = 0, used5 = 0, gold5 = 0;
  double match7 = 0, used7 = 0, gold7 = 0;
  double r1_match = 0, r1_pred = 0, r1_gold = 0;
  double rl_match = 0, rl_pred = 0, rl_gold = 0;
  for (const DocumentScores& doc : per_document) {
    match5 += doc.f1_5.credit;
    used5 += doc.f1_5.predicted_used;
    gold5 += doc.f1_5.gold_count;
    match7 += doc.f1_7.credit;
    used7 += doc.f1_7.predicted_used;
    gold7 += doc.f1_7.gold_count;
    r1_match += doc.rouge1.match_count;
    r1_pred += doc.rouge1.pred_count;
    r1_gold += doc.rouge1.gold_count;
    rl_match += doc.rougel.match_count;
    rl_pred += doc.rougel.pred_count;
    rl_gold += doc.rougel.gold_count;
  }
  report.f1_at_5 = pooled_f1(match5, used5, gold5);
  report.f1_at_7 = pooled_f1(match7, used7, gold7);
  report.rouge1_f1 = pooled_f1(r1_match, r1_pred, r1_gold);
  report.rougel_f1 = pooled_f1(rl_match, rl_pred, rl_gold);
  return report;
}

}  // namespace kpeval
