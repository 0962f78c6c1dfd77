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
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "kpeval/keyphrase.hpp"

using kpeval::DocumentScores;
using kpeval::f1_at_k;
using kpeval::KeyphraseList;
using kpeval::macro_aggregate;
using kpeval::MatchReport;
using kpeval::micro_aggregate;
using kpeval::normalize_keyphrases;
using kpeval::overlap_partial_f1_at_k;
using kpeval::rouge1_f1;
using kpeval::rouge_tokens;
using kpeval::rougel_f1;
using kpeval::RougeScore;

namespace {

using TokenList = std::vector<std::string>;

// Mirrors the full-match definition from first principles: normalize both
// sides, truncate predictions to k, count set intersection.
MatchReport oracle_f1_at_k(const KeyphraseList& predicted,
                           const KeyphraseList& gold, int k, bool strict_k) {
  KeyphraseList pred_norm = normalize_keyphrases(predicted);
  KeyphraseList gold_norm = normalize_keyphrases(gold);
  if (static_cast<int>(pred_norm.size()) > k) pred_norm.resize(k);

  MatchReport report;
  report.predicted_used = static_cast<int>(pred_norm.size());
  report.gold_count = static_cast<int>(gold_norm.size());
  std::set<std::string> gold_set(gold_norm.begin(), gold_norm.end());
  for (const std::string& phrase : pred_norm) {
    if (gold_set.count(phrase) > 0) ++report.matched;
  }
  report.credit = report.matched;
  int denominator = strict_k ? k : report.predicted_used;
  report.precision =
      denominator > 0 ? static_cast<double>(report.matched) / denominator : 0.0;
  report.recall = report.gold_count > 0
                      ? static_cast<double>(report.matched) / report.gold_count
                      : 0.0;
  double pr = report.precision + report.recall;
  report.f1 = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
  return report;
}

// Full-matrix LCS, kept deliberately different from the two-row production
// version.
int oracle_lcs(const TokenList& a, const TokenList& b) {
  std::vector<std::vector<int>> dp(a.size() + 1,
                                   std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1]
                     ? dp[i - 1][j - 1] + 1
                     : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

KeyphraseList random_phrases(std::mt19937& rng) {
  static const std::vector<std::string> vocabulary = {
      "alpha", "beta", "gamma", "delta", "epsilon", "graph",
      "net",   "deep", "model", "data"};
  KeyphraseList phrases;
  unsigned count = rng() % 13;
  for (unsigned p = 0; p < count; ++p) {
    std::string phrase;
    unsigned length = 1 + rng() % 3;
    for (unsigned t = 0; t < length; ++t) {
      if (!phrase.empty()) phrase += ' ';
      phrase += vocabulary[rng() % vocabulary.size()];
    }
    phrases.push_back(phrase);
  }
  return phrases;
}

TokenList random_tokens(std::mt19937& rng, unsigned max_len) {
  static const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e"};
  TokenList tokens;
  unsigned length = rng() % (max_len + 1);
  for (unsigned t = 0; t < length; ++t) {
    tokens.push_back(alphabet[rng() % alphabet.size()]);
  }
  return tokens;
}

}  // namespace

TEST_CASE("full-match scoring on worked examples") {
  KeyphraseList gold = {"deep learning", "graph mining", "neural nets",
                        "topic models", "parsing", "data flow"};

  SUBCASE("identical lists score one") {
    KeyphraseList five = {"a x", "b y", "c z", "d w", "e v"};
    MatchReport report = f1_at_k(five, five, 5);
    CHECK(report.f1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.matched == 5);
    CHECK(report.predicted_used == 5);
  }
  SUBCASE("three of five against six gold") {
    KeyphraseList predicted = {"deep learning", "graph mining", "neural nets",
                               "wrong one", "also wrong"};
    MatchReport report = f1_at_k(predicted, gold, 5);
    CHECK(report.precision == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(report.recall == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.f1 == doctest::Approx(6.0 / 11.0).epsilon(1e-12));
  }
  SUBCASE("three correct predictions, short list") {
    KeyphraseList predicted = {"deep learning", "graph mining", "neural nets"};
    MatchReport at5 = f1_at_k(predicted, gold, 5);
    CHECK(at5.precision == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at5.recall == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at5.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    MatchReport at7 = f1_at_k(predicted, gold, 7);
    CHECK(at7.f1 == at5.f1);
  }
  SUBCASE("strict cutoff divides by k") {
    KeyphraseList predicted = {"deep learning", "graph mining", "neural nets"};
    MatchReport strict = f1_at_k(predicted, gold, 5, true);
    CHECK(strict.precision == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(strict.recall == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(strict.f1 == doctest::Approx(6.0 / 11.0).epsilon(1e-12));
  }
  SUBCASE("empty predictions score zero") {
    MatchReport report = f1_at_k({}, gold, 5);
    CHECK(report.precision == 0.0);
    CHECK(report.recall == 0.0);
    CHECK(report.f1 == 0.0);
    CHECK(report.predicted_used == 0);
  }
  SUBCASE("stemming and dedup precede matching") {
    KeyphraseList predicted = {"Deep Learning", "deep learnings", "Graph Mining"};
    MatchReport report = f1_at_k(predicted, gold, 5);
    CHECK(report.predicted_used == 2);  // duplicates collapse before cutoff
    CHECK(report.matched == 2);
  }
}

TEST_CASE("full-match scoring equals the brute-force oracle") {
  std::mt19937 rng(20260822);
  for (int iter = 0; iter < 1000; ++iter) {
    KeyphraseList predicted = random_phrases(rng);
    KeyphraseList gold = random_phrases(rng);
    int k = 1 + rng() % 10;
    bool strict = rng() % 2 == 0;
    MatchReport actual = f1_at_k(predicted, gold, k, strict);
    MatchReport expected = oracle_f1_at_k(predicted, gold, k, strict);
    CHECK(actual.precision == expected.precision);
    CHECK(actual.recall == expected.recall);
    CHECK(actual.f1 == expected.f1);
    CHECK(actual.matched == expected.matched);
    CHECK(actual.predicted_used == expected.predicted_used);
    CHECK(actual.gold_count == expected.gold_count);
    CHECK(actual.matched <= std::min(actual.predicted_used, actual.gold_count));
  }
}

TEST_CASE("unigram overlap on worked examples") {
  SUBCASE("shared bigram fragment") {
    RougeScore score = rouge1_f1(rouge_tokens("neural keyphrase generation"),
                                 rouge_tokens("keyphrase generation models data"));
    CHECK(score.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(score.recall == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(score.f1 == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  }
  SUBCASE("separators are not tokens") {
    CHECK(rouge_tokens("a b, c; d") == TokenList{"a", "b", "c", "d"});
    CHECK(rouge_tokens("") == TokenList{});
  }
  SUBCASE("identical, disjoint, empty") {
    TokenList x = {"p", "q", "r"};
    CHECK(rouge1_f1(x, x).f1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rouge1_f1(x, {"s", "t"}).f1 == 0.0);
    CHECK(rouge1_f1({}, {}).f1 == 1.0);
    CHECK(rouge1_f1(x, {}).f1 == 0.0);
    CHECK(rouge1_f1({}, x).f1 == 0.0);
  }
  SUBCASE("clipping caps repeated tokens") {
    RougeScore score = rouge1_f1({"a", "a", "a"}, {"a"});
    CHECK(score.match_count == 1);
    CHECK(score.precision == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("subsequence overlap on worked examples") {
  SUBCASE("transposed tokens") {
    RougeScore score = rougel_f1({"a", "b", "c"}, {"a", "c", "b"});
    CHECK(score.match_count == 2);
    CHECK(score.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(score.recall == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(score.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("identity and empties") {
    TokenList x = {"p", "q", "r"};
    CHECK(rougel_f1(x, x).f1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rougel_f1({}, {}).f1 == 1.0);
    CHECK(rougel_f1(x, {}).f1 == 0.0);
  }
}

TEST_CASE("subsequence overlap equals the quadratic oracle") {
  std::mt19937 rng(424242);
  for (int iter = 0; iter < 1000; ++iter) {
    TokenList pred = random_tokens(rng, 50);
    TokenList gold = random_tokens(rng, 50);
    RougeScore score = rougel_f1(pred, gold);
    if (pred.empty() || gold.empty()) {
      CHECK(score.match_count == 0);
      continue;
    }
    int lcs = oracle_lcs(pred, gold);
    CHECK(score.match_count == lcs);
    double precision = static_cast<double>(lcs) / pred.size();
    double recall = static_cast<double>(lcs) / gold.size();
    double f1 = precision + recall > 0.0
                    ? 2.0 * precision * recall / (precision + recall)
                    : 0.0;
    CHECK(std::abs(score.f1 - f1) <= 1e-12);
  }
}

TEST_CASE("overlap metrics are symmetric in F1") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 300; ++iter) {
    TokenList pred = random_tokens(rng, 25);
    TokenList gold = random_tokens(rng, 25);
    RougeScore u1 = rouge1_f1(pred, gold);
    RougeScore u2 = rouge1_f1(gold, pred);
    CHECK(u1.f1 == u2.f1);
    CHECK(u1.precision == u2.recall);
    CHECK(u1.recall == u2.precision);
    RougeScore l1 = rougel_f1(pred, gold);
    RougeScore l2 = rougel_f1(gold, pred);
    CHECK(l1.f1 == l2.f1);
    CHECK(l1.precision == l2.recall);
    // A common subsequence is a sequence of common unigrams.
    CHECK(l1.match_count <= u1.match_count);
  }
}

TEST_CASE("partial credit on worked examples") {
  SUBCASE("half overlap") {
    MatchReport report =
        overlap_partial_f1_at_k({"intelligent system"}, {"system design"}, 5);
    CHECK(report.credit == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.precision == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.recall == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.f1 == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("exact matches reproduce the full-match score") {
    KeyphraseList predicted = {"alpha beta", "gamma", "unrelated phrase"};
    KeyphraseList gold = {"gamma", "alpha beta", "missing one"};
    MatchReport partial = overlap_partial_f1_at_k(predicted, gold, 5);
    MatchReport full = f1_at_k(predicted, gold, 5);
    // "unrelated phrase" shares no tokens with the leftover gold.
    CHECK(partial.precision == full.precision);
    CHECK(partial.recall == full.recall);
    CHECK(partial.f1 == full.f1);
  }
  SUBCASE("no shared tokens means zero credit") {
    MatchReport report = overlap_partial_f1_at_k({"aa bb"}, {"cc dd"}, 5);
    CHECK(report.credit == 0.0);
    CHECK(report.f1 == 0.0);
  }
  SUBCASE("an early fuzzy grab cannot steal an exact partner") {
    KeyphraseList predicted = {"beta zz", "beta gamma"};
    KeyphraseList gold = {"beta gamma", "qq"};
    MatchReport partial = overlap_partial_f1_at_k(predicted, gold, 5);
    MatchReport full = f1_at_k(predicted, gold, 5);
    CHECK(full.f1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(partial.f1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(partial.f1 >= full.f1);
  }
  SUBCASE("unmatched predictions leave gold available") {
    MatchReport report =
        overlap_partial_f1_at_k({"zz", "alpha gamma"}, {"alpha beta"}, 5);
    CHECK(report.credit == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("partial credit dominates full match") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 500; ++iter) {
    KeyphraseList predicted = random_phrases(rng);
    KeyphraseList gold = random_phrases(rng);
    int k = 1 + rng() % 10;
    MatchReport partial = overlap_partial_f1_at_k(predicted, gold, k);
    MatchReport full = f1_at_k(predicted, gold, k);
    CHECK(partial.credit >= full.credit - 1e-12);
    CHECK(partial.f1 >= full.f1 - 1e-12);
    CHECK(partial.precision <= 1.0 + 1e-12);
    CHECK(partial.recall <= 1.0 + 1e-12);
  }
}

TEST_CASE("duplicate predictions never change or improve scores") {
  std::mt19937 rng(808);
  for (int iter = 0; iter < 300; ++iter) {
    KeyphraseList predicted = random_phrases(rng);
    KeyphraseList gold = random_phrases(rng);
    if (predicted.empty()) continue;
    KeyphraseList with_duplicates = predicted;
    for (unsigned d = 0; d < 1 + rng() % 3; ++d) {
      std::size_t source = rng() % predicted.size();
      std::size_t slot =
          source + 1 + rng() % (with_duplicates.size() - source);
      with_duplicates.insert(with_duplicates.begin() + slot, predicted[source]);
    }
    int k = 1 + rng() % 10;
    MatchReport original = f1_at_k(predicted, gold, k);
    MatchReport doubled = f1_at_k(with_duplicates, gold, k);
    CHECK(doubled.f1 == original.f1);
    CHECK(doubled.predicted_used == original.predicted_used);
  }
}

TEST_CASE("aggregation across documents") {
  auto make_doc = [](double f1) {
    DocumentScores doc;
    doc.f1_5.f1 = doc.f1_7.f1 = f1;
    doc.rouge1.f1 = doc.rougel.f1 = f1;
    return doc;
  };

  SUBCASE("single document passes through") {
    kpeval::EvalReport report = macro_aggregate({make_doc(0.25)}, "m");
    CHECK(report.f1_at_5 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.document_count == 1);
    CHECK(report.method == "m");
  }
  SUBCASE("mean of zero and one") {
    kpeval::EvalReport report =
        macro_aggregate({make_doc(0.0), make_doc(1.0)}, "m");
    CHECK(report.f1_at_5 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.rougel_f1 == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("empty input refuses to average") {
    CHECK_THROWS_WITH(macro_aggregate({}, "m"), "no_documents");
    CHECK_THROWS_WITH(micro_aggregate({}, "m"), "no_documents");
  }
  SUBCASE("random batch equals an independent mean") {
    std::mt19937 rng(2024);
    std::vector<DocumentScores> docs;
    double sum = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double f1 = static_cast<double>(rng() % 1000) / 999.0;
      docs.push_back(make_doc(f1));
      sum += f1;
    }
    kpeval::EvalReport report = macro_aggregate(docs, "m");
    CHECK(std::abs(report.f1_at_5 - sum / 1000.0) <= 1e-12);
    CHECK(std::abs(report.rouge1_f1 - sum / 1000.0) <= 1e-12);
    CHECK(report.document_count == 1000);
  }
}

TEST_CASE("pooled aggregation uses raw counts") {
  DocumentScores doc1;
  doc1.f1_5.matched = 1;
  doc1.f1_5.credit = 1.0;
  doc1.f1_5.predicted_used = 1;
  doc1.f1_5.gold_count = 2;
  doc1.f1_7 = doc1.f1_5;
  doc1.rouge1.match_count = 1;
  doc1.rouge1.pred_count = 1;
  doc1.rouge1.gold_count = 2;
  doc1.rougel = doc1.rouge1;

  DocumentScores doc2;
  doc2.f1_5.predicted_used = 2;
  doc2.f1_5.gold_count = 1;
  doc2.f1_7 = doc2.f1_5;
  doc2.rouge1.pred_count = 2;
  doc2.rouge1.gold_count = 1;
  doc2.rougel = doc2.rouge1;

  kpeval::EvalReport report = micro_aggregate({doc1, doc2}, "m");
  // Pooled: credit 1 over 3 used and 3 gold on both metric families.
  CHECK(report.f1_at_5 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(report.rouge1_f1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}
