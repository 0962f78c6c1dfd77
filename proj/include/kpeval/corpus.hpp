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

#ifndef KPEVAL_CORPUS_HPP_
#define KPEVAL_CORPUS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpeval {

struct RawRecord {
  std::string title;
  std::string abstract_text;
  std::vector<std::string> keywords;
};

enum class Split { kTrain, kVal, kTest };

std::optional<Split> split_from_name(std::string_view name);
const char* split_name(Split split);

struct FilterThresholds {
  int min_abstract_tokens = 20;
  int min_title_tokens = 2;
  int min_keyword_tokens = 2;

  // Train and validation share one preset; the test split is stricter.
  static FilterThresholds for_split(Split split);
};

struct PaperRecord {
  std::vector<std::string> title_tokens;
  std::vector<std::string> abstract_tokens;
  std::string keyphrase_string;
  Split split = Split::kTrain;
};

enum class RejectReason {
  kMalformed,
  kAbstractTooShort,
  kNotEnglish,
  kTitleTooShort,
  kKeywordsTooShort,
};

const char* reject_reason_name(RejectReason reason);

inline constexpr double kDefaultEnglishThreshold = 0.15;

// Fraction of abstract tokens found in the bundled function-word list must
// reach the threshold. The abstract must be non-empty.
bool detect_english(const RawRecord& record,
                    double threshold = kDefaultEnglishThreshold);

// Lowercases, tokenizes and threshold-checks one record. Checks run in a
// fixed order (abstract length, language, title length, keyword tokens) so
// a record failing several gets a stable reason. All thresholds inclusive.
std::optional<PaperRecord> clean_and_filter(
    const RawRecord& raw, const FilterThresholds& thresholds, Split split,
    RejectReason* reason = nullptr,
    double english_threshold = kDefaultEnglishThreshold);

struct ModelTextLimits {
  int max_source_tokens = 270;
  int max_target_tokens = 21;
  int vocab_cap = 90000;
};

struct ModelExample {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

// source = title + abstract tokens truncated to max_source_tokens; target =
// tokenized keyphrase string truncated to max_target_tokens; every decimal
// digit character replaced by '#'.
ModelExample normalize_for_model(const PaperRecord& record,
                                 const ModelTextLimits& limits);

// Frequency-capped vocabulary. Accumulation is order-independent: the final
// ranking sorts by (count desc, token asc).
class VocabBuilder {
 public:
  void add(const std::vector<std::string>& tokens);
  void merge(const VocabBuilder& other);
  std::vector<std::string> build(int cap) const;

 private:
  std::map<std::string, int64_t> counts_;
};

struct CorpusStats {
  int64_t record_count = 0;
  int64_t total_keyphrases = 0;
  int64_t total_title_tokens = 0;
  int64_t total_abstract_tokens = 0;
  double avg_keyphrases_per_record = 0.0;
  double avg_title_tokens = 0.0;
  double avg_abstract_tokens = 0.0;
};

// Running totals over PaperRecords; keyphrases are counted per record by
// parsing the keyphrase string. finish() throws on an empty accumulator.
class StatsAccumulator {
 public:
  void add(const PaperRecord& record);
  void merge(const StatsAccumulator& other);
  CorpusStats finish() const;

 private:
  CorpusStats totals_;
};

// One corpus line: an object with string fields "title", "abstract" and
// "keywords" (the comma-separated keyphrase string; a string array is also
// accepted). Returns nothing and sets `error` when the line is malformed.
std::optional<RawRecord> parse_record_line(std::string_view line,
                                           std::string* error = nullptr);

std::string record_line(const PaperRecord& record);

// Reads a whole processed corpus; throws on unreadable file or bad line.
std::vector<PaperRecord> read_processed_corpus(const std::string& path,
                                               Split split = Split::kTrain);

}  // namespace kpeval

#endif  // KPEVAL_CORPUS_HPP_
