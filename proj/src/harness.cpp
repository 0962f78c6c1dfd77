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

#include "kpeval/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kpeval/keyphrase.hpp"
#include "kpeval/metrics.hpp"
#include "kpeval/porter.hpp"
#include "kpeval/tokenizer.hpp"
#include "kpeval/wordlists.hpp"

namespace kpeval {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw std::runtime_error("cannot read: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw std::runtime_error("cannot write: " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

std::string fixed4(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

// Index-addressed work queue; results land by index, so the merged output
// is identical for any worker count.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<Result> results(count);
  std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& thread : threads) thread.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

ordered_json thresholds_json(const FilterThresholds& thresholds) {
  return ordered_json{{"min_abstract_tokens", thresholds.min_abstract_tokens},
                      {"min_title_tokens", thresholds.min_title_tokens},
                      {"min_keyword_tokens", thresholds.min_keyword_tokens}};
}

ordered_json limits_json(const ModelTextLimits& limits) {
  return ordered_json{{"max_source_tokens", limits.max_source_tokens},
                      {"max_target_tokens", limits.max_target_tokens},
                      {"vocab_cap", limits.vocab_cap}};
}

const std::unordered_set<std::string>& resolve_stopwords(
    const std::string& path, std::unordered_set<std::string>& storage) {
  if (path.empty()) return english_stopwords();
  storage = load_wordlist_file(path);
  return storage;
}

std::string stopwords_label(const std::string& path) {
  return path.empty() ? std::string(kEnglishWordlistVersion) : path;
}

}  // namespace

std::string manifest_json(const RunManifest& manifest) {
  ordered_json doc;
  doc["tool"] = std::string(kToolName) + " " + kToolVersion;
  doc["command"] = manifest.command;
  doc["inputs"] = manifest.inputs;
  doc["output"] = manifest.output;
  doc["config"] = manifest.config;
  // No clock, no RNG: outputs are a pure function of inputs and config.
  doc["seed_free"] = true;
  return doc.dump(2) + "\n";
}

void write_manifest_beside(const RunManifest& manifest) {
  write_text_file(manifest.output + ".manifest.json", manifest_json(manifest));
}

ordered_json extractor_config_json(const ExtractorConfig& config) {
  return ordered_json{
      {"max_phrase_len", config.max_phrase_len},
      {"cooccurrence_window", config.cooccurrence_window},
      {"clustering_threshold", config.clustering_threshold},
      {"damping", config.damping},
      {"pagerank_tolerance", config.pagerank_tolerance},
      {"pagerank_max_iters", config.pagerank_max_iters},
      {"n_keyphrases", config.n_keyphrases},
      {"topic_selection", topic_selection_name(config.topic_selection)}};
}

std::vector<ExtractorConfig> load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw std::runtime_error("cannot read: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw std::runtime_error("grid file must be a JSON array: " + path);
  }
  if (doc.empty()) throw std::runtime_error("empty tuning grid: " + path);

  std::vector<ExtractorConfig> grid;
  grid.reserve(doc.size());
  for (const auto& entry : doc) {
    if (!entry.is_object()) {
      throw std::runtime_error("grid entries must be objects: " + path);
    }
    ExtractorConfig config;
    for (const auto& [key, value] : entry.items()) {
      if (key == "max_phrase_len") {
        config.max_phrase_len = value.get<int>();
      } else if (key == "cooccurrence_window") {
        config.cooccurrence_window = value.get<int>();
      } else if (key == "clustering_threshold") {
        config.clustering_threshold = value.get<double>();
      } else if (key == "damping") {
        config.damping = value.get<double>();
      } else if (key == "pagerank_tolerance") {
        config.pagerank_tolerance = value.get<double>();
      } else if (key == "pagerank_max_iters") {
        config.pagerank_max_iters = value.get<int>();
      } else if (key == "n_keyphrases") {
        config.n_keyphrases = value.get<int>();
      } else if (key == "topic_selection") {
        auto selection = topic_selection_from_name(value.get<std::string>());
        if (!selection) {
          throw std::runtime_error("unknown topic_selection in grid: " +
                                   value.get<std::string>());
        }
        config.topic_selection = *selection;
      } else {
        throw std::runtime_error("unknown grid key: " + key);
      }
    }
    grid.push_back(config);
  }
  return grid;
}

namespace {

struct LineOutcome {
  bool kept = false;
  bool malformed = false;
  RejectReason reason = RejectReason::kMalformed;
  std::string payload;  // serialized record when kept, error detail otherwise
};

}  // namespace

int run_preprocess(const PreprocessOptions& options, std::ostream& out,
                   std::ostream& err) {
  try {
    std::vector<std::string> lines = read_lines(options.input);
    FilterThresholds thresholds = FilterThresholds::for_split(options.split);

    std::vector<LineOutcome> outcomes = parallel_map<LineOutcome>(
        lines.size(), options.jobs, [&](std::size_t i) {
          LineOutcome outcome;
          std::string error;
          std::optional<RawRecord> raw = parse_record_line(lines[i], &error);
          if (!raw) {
            outcome.malformed = true;
            outcome.reason = RejectReason::kMalformed;
            outcome.payload = error;
            return outcome;
          }
          RejectReason reason = RejectReason::kMalformed;
          std::optional<PaperRecord> record =
              clean_and_filter(*raw, thresholds, options.split, &reason,
                               options.english_threshold);
          if (!record) {
            outcome.reason = reason;
            return outcome;
          }
          outcome.kept = true;
          outcome.payload = record_line(*record);
          return outcome;
        });

    std::string corpus_out;
    std::ostringstream reject_log;
    std::map<std::string, int64_t> reason_counts;
    int64_t kept = 0, rejected = 0, malformed = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const LineOutcome& outcome = outcomes[i];
      if (outcome.kept) {
        corpus_out += outcome.payload;
        corpus_out += '\n';
        ++kept;
        continue;
      }
      ++rejected;
      if (outcome.malformed) ++malformed;
      reject_log << "line " << (i + 1) << ": "
                 << reject_reason_name(outcome.reason);
      if (outcome.malformed && !outcome.payload.empty()) {
        reject_log << " (" << outcome.payload << ")";
      }
      reject_log << "\n";
      ++reason_counts[reject_reason_name(outcome.reason)];
    }
    reject_log << "counts:\n";
    for (const auto& [reason, count] : reason_counts) {
      reject_log << "  " << reason << ": " << count << "\n";
    }
    reject_log << "kept: " << kept << "\n";
    reject_log << "rejected: " << rejected << "\n";

    write_text_file(options.output, corpus_out);
    write_text_file(options.output + ".rejects.log", reject_log.str());

    RunManifest manifest;
    manifest.command = "preprocess";
    manifest.inputs = {options.input};
    manifest.output = options.output;
    manifest.config = ordered_json{
        {"split", split_name(options.split)},
        {"filter_thresholds", thresholds_json(thresholds)},
        {"english_threshold", options.english_threshold},
        {"function_words", kEnglishWordlistVersion},
        {"model_text_limits", limits_json(ModelTextLimits{})}};
    write_manifest_beside(manifest);

    out << "kept " << kept << " of " << lines.size() << " records ("
        << rejected << " rejected; see " << options.output << ".rejects.log)\n";
    if (lines.empty()) {
      err << "error: empty input: " << options.input << "\n";
      return kExitHardError;
    }
    return malformed > 0 ? kExitPartial : kExitOk;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitHardError;
  }
}

int run_extract(const ExtractOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    std::vector<PaperRecord> records = read_processed_corpus(options.input);
    std::unordered_set<std::string> storage;
    const std::unordered_set<std::string>& stopwords =
        resolve_stopwords(options.stopwords_path, storage);

    std::vector<std::string> predictions = parallel_map<std::string>(
        records.size(), options.jobs, [&](std::size_t i) {
          return join_keyphrases(
              extract_for_record(options.method, records[i], options.config,
                                 stopwords));
        });

    std::string content;
    for (const std::string& line : predictions) {
      content += line;
      content += '\n';
    }
    write_text_file(options.output, content);

    RunManifest manifest;
    manifest.command = "extract";
    manifest.inputs = {options.input};
    manifest.output = options.output;
    manifest.config =
        ordered_json{{"method", method_name(options.method)},
                     {"extractor", extractor_config_json(options.config)},
                     {"stopwords", stopwords_label(options.stopwords_path)}};
    write_manifest_beside(manifest);

    out << "extracted keyphrases for " << records.size() << " records\n";
    return kExitOk;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitHardError;
  }
}

namespace {

ordered_json match_report_json(int k, const MatchReport& report) {
  return ordered_json{{"k", k},
                      {"precision", report.precision},
                      {"recall", report.recall},
                      {"f1", report.f1},
                      {"matched", report.matched},
                      {"predicted_used", report.predicted_used},
                      {"gold_count", report.gold_count},
                      {"credit", report.credit}};
}

ordered_json rouge_json(const RougeScore& score) {
  return ordered_json{{"precision", score.precision},
                      {"recall", score.recall},
                      {"f1", score.f1},
                      {"match_count", score.match_count},
                      {"pred_count", score.pred_count},
                      {"gold_count", score.gold_count}};
}

// True if any gold phrase's stem sequence occurs contiguously in the
// document's stem sequence. Documents where none does bound what an
// extractive method can recover.
bool any_gold_in_document(const PaperRecord& record,
                          const KeyphraseList& gold) {
  std::string doc_stems = " ";
  for (const std::vector<std::string>* tokens :
       {&record.title_tokens, &record.abstract_tokens}) {
    for (const std::string& token : *tokens) {
      if (is_punctuation_token(token)) continue;
      doc_stems += porter_stem(ascii_lower(token));
      doc_stems += ' ';
    }
  }
  for (const std::string& phrase : gold) {
    std::string canonical = canonical_phrase(phrase);
    if (canonical.empty()) continue;
    if (doc_stems.find(" " + canonical + " ") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

int run_score(const ScoreOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    if (options.ks.empty() || options.ks.size() > 2) {
      err << "error: score expects one or two --k cutoffs\n";
      return kExitHardError;
    }
    int k_low = options.ks.front();
    int k_high = options.ks.size() > 1 ? options.ks[1] : options.ks.front();

    std::vector<PaperRecord> gold_records = read_processed_corpus(options.gold);
    std::vector<std::string> prediction_lines = read_lines(options.predictions);
    if (gold_records.size() != prediction_lines.size()) {
      err << "error: line count mismatch: " << options.predictions << " has "
          << prediction_lines.size() << " lines, " << options.gold << " has "
          << gold_records.size() << "\n";
      return kExitHardError;
    }

    auto match = options.partial ? overlap_partial_f1_at_k : f1_at_k;

    std::vector<DocumentScores> scored;
    ordered_json per_document = ordered_json::array();
    int64_t skipped_empty_gold = 0;
    int64_t empty_prediction_lines = 0;
    int64_t rouge_both_empty = 0;
    int64_t absent_gold_documents = 0;
    for (std::size_t i = 0; i < gold_records.size(); ++i) {
      KeyphraseList gold = parse_keyphrases(gold_records[i].keyphrase_string);
      if (normalize_keyphrases(gold).empty()) {
        ++skipped_empty_gold;
        continue;
      }
      KeyphraseList predicted = parse_keyphrases(prediction_lines[i]);
      if (predicted.empty()) ++empty_prediction_lines;
      if (!any_gold_in_document(gold_records[i], gold)) ++absent_gold_documents;

      DocumentScores scores;
      scores.f1_5 = match(predicted, gold, k_low, options.strict_k);
      scores.f1_7 = match(predicted, gold, k_high, options.strict_k);
      std::vector<std::string> pred_tokens = rouge_tokens(prediction_lines[i]);
      std::vector<std::string> gold_tokens =
          rouge_tokens(gold_records[i].keyphrase_string);
      if (pred_tokens.empty() && gold_tokens.empty()) ++rouge_both_empty;
      scores.rouge1 = rouge1_f1(pred_tokens, gold_tokens);
      scores.rougel = rougel_f1(pred_tokens, gold_tokens);
      scored.push_back(scores);

      ordered_json entry;
      entry["line"] = i + 1;
      entry["match"] = ordered_json::array({match_report_json(k_low, scores.f1_5),
                                            match_report_json(k_high, scores.f1_7)});
      entry["rouge1"] = rouge_json(scores.rouge1);
      entry["rougel"] = rouge_json(scores.rougel);
      per_document.push_back(std::move(entry));
    }

    EvalReport report = options.micro
                            ? micro_aggregate(scored, options.method_name)
                            : macro_aggregate(scored, options.method_name);

    std::string output_path = options.output.empty()
                                  ? options.predictions + ".report.json"
                                  : options.output;

    ordered_json doc;
    doc["method"] = report.method;
    doc["aggregation"] = options.micro ? "micro" : "macro";
    doc["strict_k"] = options.strict_k;
    doc["partial"] = options.partial;
    doc["ks"] = ordered_json::array({k_low, k_high});
    doc["f1_at_" + std::to_string(k_low)] = report.f1_at_5;
    doc["f1_at_" + std::to_string(k_high)] = report.f1_at_7;
    doc["rouge1_f1"] = report.rouge1_f1;
    doc["rougel_f1"] = report.rougel_f1;
    doc["document_count"] = report.document_count;
    doc["skipped_empty_gold"] = skipped_empty_gold;
    doc["empty_prediction_lines"] = empty_prediction_lines;
    doc["rouge_both_empty"] = rouge_both_empty;
    doc["absent_gold_fraction"] =
        scored.empty() ? 0.0
                       : static_cast<double>(absent_gold_documents) /
                             static_cast<double>(scored.size());
    doc["per_document"] = std::move(per_document);
    write_text_file(output_path, doc.dump(2) + "\n");

    RunManifest manifest;
    manifest.command = "score";
    manifest.inputs = {options.predictions, options.gold};
    manifest.output = output_path;
    manifest.config = ordered_json{{"method_name", options.method_name},
                                   {"ks", ordered_json::array({k_low, k_high})},
                                   {"strict_k", options.strict_k},
                                   {"partial", options.partial},
                                   {"aggregation", options.micro ? "micro" : "macro"}};
    write_manifest_beside(manifest);

    out << "method\tf1@" << k_low << "\tf1@" << k_high
        << "\trouge1_f1\trougel_f1\tdocuments\n";
    out << report.method << "\t" << fixed4(report.f1_at_5) << "\t"
        << fixed4(report.f1_at_7) << "\t" << fixed4(report.rouge1_f1) << "\t"
        << fixed4(report.rougel_f1) << "\t" << report.document_count << "\n";
    return kExitOk;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitHardError;
  }
}

int run_stats(const StatsOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    std::vector<PaperRecord> records = read_processed_corpus(options.input);
    StatsAccumulator accumulator;
    for (const PaperRecord& record : records) accumulator.add(record);
    CorpusStats stats = accumulator.finish();

    out << "Attribute\tValue\n";
    out << "Records\t" << stats.record_count << "\n";
    out << "Keyphrases\t" << stats.total_keyphrases << "\n";
    out << "Title tokens\t" << stats.total_title_tokens << "\n";
    out << "Abstract tokens\t" << stats.total_abstract_tokens << "\n";
    out << "Av. Keyphrase\t" << fixed4(stats.avg_keyphrases_per_record) << "\n";
    out << "Av. Title\t" << fixed4(stats.avg_title_tokens) << "\n";
    out << "Av. Abstract\t" << fixed4(stats.avg_abstract_tokens) << "\n";

    if (!options.output.empty()) {
      ordered_json doc{{"record_count", stats.record_count},
                       {"total_keyphrases", stats.total_keyphrases},
                       {"total_title_tokens", stats.total_title_tokens},
                       {"total_abstract_tokens", stats.total_abstract_tokens},
                       {"avg_keyphrases_per_record", stats.avg_keyphrases_per_record},
                       {"avg_title_tokens", stats.avg_title_tokens},
                       {"avg_abstract_tokens", stats.avg_abstract_tokens}};
      write_text_file(options.output, doc.dump(2) + "\n");
      RunManifest manifest;
      manifest.command = "stats";
      manifest.inputs = {options.input};
      manifest.output = options.output;
      manifest.config = ordered_json::object();
      write_manifest_beside(manifest);
    }
    return kExitOk;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitHardError;
  }
}

int run_tune(const TuneOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::vector<PaperRecord> records =
        read_processed_corpus(options.input, Split::kVal);
    std::unordered_set<std::string> storage;
    const std::unordered_set<std::string>& stopwords =
        resolve_stopwords(options.stopwords_path, storage);

    std::vector<ExtractorConfig> grid =
        options.grid_path.empty() ? default_tuning_grid(options.k)
                                  : load_grid_file(options.grid_path);

    TuneResult result = tune(options.method, records, grid, options.k, stopwords);

    out << "index\tmax_phrase_len\twindow\tthreshold\tselection\tscore\n";
    ordered_json scoreboard = ordered_json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out << i << "\t" << grid[i].max_phrase_len << "\t"
          << grid[i].cooccurrence_window << "\t"
          << fixed4(grid[i].clustering_threshold) << "\t"
          << topic_selection_name(grid[i].topic_selection) << "\t"
          << fixed4(result.scores[i]) << "\n";
      scoreboard.push_back(ordered_json{{"index", i},
                                        {"config", extractor_config_json(grid[i])},
                                        {"score", result.scores[i]}});
    }
    out << "best\t" << result.best_index << "\n";

    if (!options.output.empty()) {
      ordered_json doc;
      doc["method"] = method_name(options.method);
      doc["k"] = options.k;
      doc["best_index"] = result.best_index;
      doc["best"] = extractor_config_json(result.best);
      doc["scoreboard"] = std::move(scoreboard);
      write_text_file(options.output, doc.dump(2) + "\n");

      RunManifest manifest;
      manifest.command = "tune";
      manifest.inputs = {options.input};
      if (!options.grid_path.empty()) manifest.inputs.push_back(options.grid_path);
      manifest.output = options.output;
      manifest.config =
          ordered_json{{"method", method_name(options.method)},
                       {"k", options.k},
                       {"grid", options.grid_path.empty() ? "default"
                                                          : options.grid_path},
                       {"stopwords", stopwords_label(options.stopwords_path)}};
      write_manifest_beside(manifest);
    }
    return kExitOk;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitHardError;
  }
}

}  // namespace kpeval
