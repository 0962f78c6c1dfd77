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

#ifndef KPEVAL_HARNESS_HPP_
#define KPEVAL_HARNESS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpeval/corpus.hpp"
#include "kpeval/extractors.hpp"

namespace kpeval {

inline constexpr const char* kToolName = "kpeval";
inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHardError = 1;
inline constexpr int kExitPartial = 2;

// Provenance sidecar written as <output>.manifest.json next to every file a
// command produces. Deliberately timestamp-free and seed-free: re-running
// the same manifest must reproduce the output byte for byte.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  nlohmann::ordered_json config;
};

std::string manifest_json(const RunManifest& manifest);
void write_manifest_beside(const RunManifest& manifest);

nlohmann::ordered_json extractor_config_json(const ExtractorConfig& config);

// Parses a JSON-array grid file of config overrides. Unknown keys are an
// error; missing keys keep their defaults. Throws on unreadable or invalid
// input, including an empty array.
std::vector<ExtractorConfig> load_grid_file(const std::string& path);

struct PreprocessOptions {
  std::string input;
  std::string output;
  Split split = Split::kTrain;
  double english_threshold = kDefaultEnglishThreshold;
  int jobs = 1;
};

// Filters a raw corpus into <output> plus <output>.rejects.log with
// per-reason counts. Malformed lines are skipped and turn the exit code
// into kExitPartial.
int run_preprocess(const PreprocessOptions& options, std::ostream& out,
                   std::ostream& err);

struct ExtractOptions {
  std::string input;
  std::string output;
  Method method = Method::kYake;
  ExtractorConfig config;
  std::string stopwords_path;
  int jobs = 1;
};

// Writes one keyphrase string per corpus line, aligned by line number.
int run_extract(const ExtractOptions& options, std::ostream& out,
                std::ostream& err);

struct ScoreOptions {
  std::string predictions;
  std::string gold;
  std::string output;  // defaults to <predictions>.report.json
  std::string method_name = "predictions";
  std::vector<int> ks = {5, 7};
  bool strict_k = false;
  bool partial = false;
  bool micro = false;
};

// Scores a line-aligned predictions file against the gold corpus: TSV row on
// `out`, full report JSON to the output path. Documents with empty gold are
// skipped and counted; a line-count mismatch is a hard error.
int run_score(const ScoreOptions& options, std::ostream& out,
              std::ostream& err);

struct StatsOptions {
  std::string input;
  std::string output;  // optional JSON copy
};

int run_stats(const StatsOptions& options, std::ostream& out,
              std::ostream& err);

struct TuneOptions {
  std::string input;
  std::string grid_path;  // empty: built-in default grid
  std::string output;
  Method method = Method::kYake;
  int k = 7;
  std::string stopwords_path;
};

// Grid search on the validation corpus: scoreboard TSV on `out`, winning
// config plus all per-point scores to the output path.
int run_tune(const TuneOptions& options, std::ostream& out, std::ostream& err);

}  // namespace kpeval

#endif  // KPEVAL_HARNESS_HPP_
