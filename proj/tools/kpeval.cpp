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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kpeval/harness.hpp"

namespace {

void add_stopword_flags(CLI::App* cmd, std::string& stopwords_path) {
  cmd->add_option("--stopwords", stopwords_path,
                  "Stopword list file, one token per line (default: bundled)");
}

void add_extractor_flags(CLI::App* cmd, kpeval::ExtractorConfig& config,
                         std::string& selection) {
  cmd->add_option("--max-phrase-len", config.max_phrase_len,
                  "Longest candidate phrase, in tokens")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--window", config.cooccurrence_window,
                  "Cooccurrence window size, in words")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threshold", config.clustering_threshold,
                  "Topic clustering similarity threshold");
  cmd->add_option("--damping", config.damping, "Graph ranking damping factor");
  cmd->add_option("--selection", selection,
                  "Topic representative selection strategy")
      ->check(CLI::IsMember({"first_occurrence", "frequency", "centroid"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyphrase extraction and evaluation pipeline"};
  app.set_version_flag("--version",
                       std::string(kpeval::kToolName) + " " + kpeval::kToolVersion);
  app.require_subcommand(1);

  kpeval::PreprocessOptions preprocess;
  std::string preprocess_split = "train";
  CLI::App* cmd_preprocess =
      app.add_subcommand("preprocess", "Clean and filter a raw corpus");
  cmd_preprocess->add_option("--input", preprocess.input, "Raw corpus, one record per line")
      ->required();
  cmd_preprocess->add_option("--output", preprocess.output, "Processed corpus path")
      ->required();
  cmd_preprocess->add_option("--split", preprocess_split, "Corpus split")
      ->required()
      ->check(CLI::IsMember({"train", "val", "test"}));
  cmd_preprocess->add_option("--english-threshold", preprocess.english_threshold,
                             "Minimum function-word fraction for English");
  cmd_preprocess->add_option("--jobs", preprocess.jobs, "Worker thread count")
      ->check(CLI::PositiveNumber);

  kpeval::ExtractOptions extract;
  std::string extract_method = "yake";
  std::string extract_selection;
  CLI::App* cmd_extract =
      app.add_subcommand("extract", "Run an extractor over a processed corpus");
  cmd_extract->add_option("--input", extract.input, "Processed corpus path")
      ->required();
  cmd_extract->add_option("--output", extract.output, "Predictions path")
      ->required();
  cmd_extract->add_option("--method", extract_method, "Extractor")
      ->required()
      ->check(CLI::IsMember({"yake", "topicrank"}));
  cmd_extract->add_option("--n", extract.config.n_keyphrases,
                          "Keyphrases per document")
      ->check(CLI::PositiveNumber);
  add_extractor_flags(cmd_extract, extract.config, extract_selection);
  add_stopword_flags(cmd_extract, extract.stopwords_path);
  cmd_extract->add_option("--jobs", extract.jobs, "Worker thread count")
      ->check(CLI::PositiveNumber);

  kpeval::ScoreOptions score;
  CLI::App* cmd_score =
      app.add_subcommand("score", "Score a predictions file against gold");
  cmd_score->add_option("--predictions", score.predictions,
                        "Predictions, one keyphrase string per line")
      ->required();
  cmd_score->add_option("--gold", score.gold, "Gold corpus path")->required();
  cmd_score->add_option("--output", score.output,
                        "Report path (default: <predictions>.report.json)");
  cmd_score->add_option("--method-name", score.method_name,
                        "Label for the report row");
  cmd_score
      ->add_option("--k", score.ks, "Cutoff for F1@k; may be given twice")
      ->expected(1, 2)
      ->check(CLI::PositiveNumber);
  cmd_score->add_flag("--strict-k", score.strict_k,
                      "Divide precision by k even when fewer predictions exist");
  cmd_score->add_flag("--partial", score.partial,
                      "Overlap-coefficient partial credit matching");
  cmd_score->add_flag("--micro", score.micro,
                      "Pool counts across documents instead of macro averaging");

  kpeval::StatsOptions stats;
  CLI::App* cmd_stats =
      app.add_subcommand("stats", "Corpus statistics table");
  cmd_stats->add_option("--input", stats.input, "Processed corpus path")
      ->required();
  cmd_stats->add_option("--output", stats.output, "Optional JSON stats path");

  kpeval::TuneOptions tune;
  std::string tune_method = "yake";
  CLI::App* cmd_tune =
      app.add_subcommand("tune", "Grid-search extractor parameters");
  cmd_tune->add_option("--input", tune.input, "Validation corpus path")
      ->required();
  cmd_tune->add_option("--method", tune_method, "Extractor")
      ->required()
      ->check(CLI::IsMember({"yake", "topicrank"}));
  cmd_tune->add_option("--grid", tune.grid_path,
                       "JSON array of config overrides (default: built-in grid)");
  cmd_tune->add_option("--k", tune.k, "Cutoff optimized by the search")
      ->check(CLI::PositiveNumber);
  cmd_tune->add_option("--output", tune.output, "Result JSON path");
  add_stopword_flags(cmd_tune, tune.stopwords_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kpeval::kExitOk : kpeval::kExitHardError;
  }

  if (cmd_preprocess->parsed()) {
    preprocess.split = *kpeval::split_from_name(preprocess_split);
    return kpeval::run_preprocess(preprocess, std::cout, std::cerr);
  }
  if (cmd_extract->parsed()) {
    extract.method = *kpeval::method_from_name(extract_method);
    if (!extract_selection.empty()) {
      extract.config.topic_selection =
          *kpeval::topic_selection_from_name(extract_selection);
    }
    return kpeval::run_extract(extract, std::cout, std::cerr);
  }
  if (cmd_score->parsed()) {
    return kpeval::run_score(score, std::cout, std::cerr);
  }
  if (cmd_stats->parsed()) {
    return kpeval::run_stats(stats, std::cout, std::cerr);
  }
  if (cmd_tune->parsed()) {
    tune.method = *kpeval::method_from_name(tune_method);
    return kpeval::run_tune(tune, std::cout, std::cerr);
  }
  return kpeval::kExitHardError;
}
