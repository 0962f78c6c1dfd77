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

#include "kpeval/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "kpeval/keyphrase.hpp"
#include "kpeval/tokenizer.hpp"
#include "kpeval/wordlists.hpp"

namespace kpeval {

std::optional<Split> split_from_name(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "val") return Split::kVal;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

const char* split_name(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "train";
}

FilterThresholds FilterThresholds::for_split(Split split) {
  if (split == Split::kTest) return {27, 3, 2};
  return {20, 2, 2};
}

const char* reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::kMalformed: return "malformed";
    case RejectReason::kAbstractTooShort: return "abstract_too_short";
    case RejectReason::kNotEnglish: return "not_english";
    case RejectReason::kTitleTooShort: return "title_too_short";
    case RejectReason::kKeywordsTooShort: return "keywords_too_short";
  }
  return "malformed";
}

bool detect_english(const RawRecord& record, double threshold) {
  std::vector<std::string> tokens = tokenize(record.abstract_text);
  if (tokens.empty()) return false;
  const auto& function_words = english_function_words();
  std::size_t hits = 0;
  for (const std::string& token : tokens) {
    if (function_words.count(ascii_lower(token)) > 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size()) >=
         threshold;
}

std::optional<PaperRecord> clean_and_filter(const RawRecord& raw,
                                            const FilterThresholds& thresholds,
                                            Split split, RejectReason* reason,
                                            double english_threshold) {
  auto reject = [&](RejectReason r) -> std::optional<PaperRecord> {
    if (reason != nullptr) *reason = r;
    return std::nullopt;
  };

  std::vector<std::string> abstract_tokens = tokenize(raw.abstract_text);
  if (static_cast<int>(abstract_tokens.size()) < thresholds.min_abstract_tokens) {
    return reject(RejectReason::kAbstractTooShort);
  }
  if (!detect_english(raw, english_threshold)) {
    return reject(RejectReason::kNotEnglish);
  }
  std::vector<std::string> title_tokens = tokenize(raw.title);
  if (static_cast<int>(title_tokens.size()) < thresholds.min_title_tokens) {
    return reject(RejectReason::kTitleTooShort);
  }

  // Keywords are cleaned first; the threshold counts tokens across the whole
  // cleaned keyword string, not per phrase.
  KeyphraseList phrases = parse_keyphrases(join_keyphrases(raw.keywords));
  std::size_t keyword_tokens = 0;
  for (const std::string& phrase : phrases) {
    keyword_tokens += tokenize(phrase).size();
  }
  if (static_cast<int>(keyword_tokens) < thresholds.min_keyword_tokens) {
    return reject(RejectReason::kKeywordsTooShort);
  }

  PaperRecord record;
  record.title_tokens.reserve(title_tokens.size());
  for (const std::string& token : title_tokens) {
    record.title_tokens.push_back(ascii_lower(token));
  }
  record.abstract_tokens.reserve(abstract_tokens.size());
  for (const std::string& token : abstract_tokens) {
    record.abstract_tokens.push_back(ascii_lower(token));
  }
  record.keyphrase_string = join_keyphrases(phrases);
  record.split = split;
  return record;
}

namespace {

void mask_digits(std::vector<std::string>& tokens) {
  for (std::string& token : tokens) {
    for (char& c : token) {
      if (c >= '0' && c <= '9') c = '#';
    }
  }
}

}  // namespace

ModelExample normalize_for_model(const PaperRecord& record,
                                 const ModelTextLimits& limits) {
  ModelExample example;
  example.source = record.title_tokens;
  example.source.insert(example.source.end(), record.abstract_tokens.begin(),
                        record.abstract_tokens.end());
  if (example.source.size() > static_cast<std::size_t>(limits.max_source_tokens)) {
    example.source.resize(limits.max_source_tokens);
  }
  example.target = tokenize(record.keyphrase_string);
  if (example.target.size() > static_cast<std::size_t>(limits.max_target_tokens)) {
    example.target.resize(limits.max_target_tokens);
  }
  mask_digits(example.source);
  mask_digits(example.target);
  return example;
}

void VocabBuilder::add(const std::vector<std::string>& tokens) {
  for (const std::string& token : tokens) ++counts_[token];
}

void VocabBuilder::merge(const VocabBuilder& other) {
  for (const auto& [token, count] : other.counts_) counts_[token] += count;
}

std::vector<std::string> VocabBuilder::build(int cap) const {
  std::vector<std::pair<std::string, int64_t>> entries(counts_.begin(),
                                                       counts_.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (entries.size() > static_cast<std::size_t>(cap)) entries.resize(cap);
  std::vector<std::string> vocab;
  vocab.reserve(entries.size());
  for (auto& [token, count] : entries) vocab.push_back(std::move(token));
  return vocab;
}

void StatsAccumulator::add(const PaperRecord& record) {
  ++totals_.record_count;
  totals_.total_keyphrases +=
      static_cast<int64_t>(parse_keyphrases(record.keyphrase_string).size());
  totals_.total_title_tokens += static_cast<int64_t>(record.title_tokens.size());
  totals_.total_abstract_tokens +=
      static_cast<int64_t>(record.abstract_tokens.size());
}

void StatsAccumulator::merge(const StatsAccumulator& other) {
  totals_.record_count += other.totals_.record_count;
  totals_.total_keyphrases += other.totals_.total_keyphrases;
  totals_.total_title_tokens += other.totals_.total_title_tokens;
  totals_.total_abstract_tokens += other.totals_.total_abstract_tokens;
}

CorpusStats StatsAccumulator::finish() const {
  if (totals_.record_count == 0) throw std::runtime_error("empty_corpus");
  CorpusStats stats = totals_;
  double n = static_cast<double>(stats.record_count);
  stats.avg_keyphrases_per_record = static_cast<double>(stats.total_keyphrases) / n;
  stats.avg_title_tokens = static_cast<double>(stats.total_title_tokens) / n;
  stats.avg_abstract_tokens = static_cast<double>(stats.total_abstract_tokens) / n;
  return stats;
}

std::optional<RawRecord> parse_record_line(std::string_view line,
                                           std::string* error) {
  auto fail = [&](const char* message) -> std::optional<RawRecord> {
    if (error != nullptr) *error = message;
    return std::nullopt;
  };

  nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    return fail("not a valid record object");
  }
  if (!parsed.contains("title") || !parsed["title"].is_string()) {
    return fail("missing string field: title");
  }
  if (!parsed.contains("abstract") || !parsed["abstract"].is_string()) {
    return fail("missing string field: abstract");
  }
  if (!parsed.contains("keywords")) {
    return fail("missing field: keywords");
  }

  RawRecord record;
  record.title = parsed["title"].get<std::string>();
  record.abstract_text = parsed["abstract"].get<std::string>();
  const nlohmann::json& keywords = parsed["keywords"];
  if (keywords.is_string()) {
    record.keywords = parse_keyphrases(keywords.get<std::string>());
  } else if (keywords.is_array()) {
    for (const nlohmann::json& item : keywords) {
      if (!item.is_string()) return fail("keywords array holds a non-string");
      record.keywords.push_back(item.get<std::string>());
    }
  } else {
    return fail("keywords must be a string or a string array");
  }
  return record;
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& token : tokens) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

}  // namespace

std::string record_line(const PaperRecord& record) {
  nlohmann::json line = {
      {"title", join_tokens(record.title_tokens)},
      {"abstract", join_tokens(record.abstract_tokens)},
      {"keywords", record.keyphrase_string},
  };
  return line.dump();
}

std::vector<PaperRecord> read_processed_corpus(const std::string& path,
                                               Split split) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot read corpus: " + path);
  std::vector<PaperRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string error;
    std::optional<RawRecord> raw = parse_record_line(line, &error);
    if (!raw) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               error);
    }
    PaperRecord record;
    record.title_tokens = tokenize(raw->title);
    record.abstract_tokens = tokenize(raw->abstract_text);
    record.keyphrase_string = join_keyphrases(raw->keywords);
    record.split = split;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace kpeval
